//! JSON round-trips for the table-backed types: categories, functors,
//! targets, objects, morphisms, and diagrams. Compositions serialize as
//! sorted triple lists so the output is canonical; loading rebuilds
//! through `CatBuilder` and re-validates.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::fincat::{CatBuilder, TableCategory, TableFunctor};
use crate::gf::Matrix;
use crate::pset::PFun;
use crate::targetcat::{Diagram, Mor, Ob, Target};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CategoryDto {
    pub name: String,
    pub objects: Vec<String>,
    /// (token, dom, cod) per morphism
    pub mors: Vec<(String, usize, usize)>,
    /// identity morphism index per object
    pub ids: Vec<usize>,
    /// (g, f, g∘f), sorted
    pub comp: Vec<(usize, usize, usize)>,
}

pub fn category_to_dto(c: &TableCategory) -> CategoryDto {
    let mut comp: Vec<(usize, usize, usize)> =
        c.comp.iter().map(|(&(g, f), &gf)| (g, f, gf)).collect();
    comp.sort_unstable();
    CategoryDto {
        name: c.name.clone(),
        objects: c.objects.clone(),
        mors: c.mors.iter().map(|m| (m.name.clone(), m.dom, m.cod)).collect(),
        ids: c.ids.clone(),
        comp,
    }
}

pub fn category_from_dto(dto: &CategoryDto) -> Result<TableCategory, String> {
    let mut b = CatBuilder::new(&dto.name);
    for ob in &dto.objects {
        b.object(ob);
    }
    for (tok, d, c) in &dto.mors {
        if *d >= dto.objects.len() || *c >= dto.objects.len() {
            return Err(format!("morphism {tok} has an out-of-range endpoint"));
        }
        b.morphism(tok, *d, *c);
    }
    if dto.ids.len() != dto.objects.len() {
        return Err("identity list must cover every object".into());
    }
    for (ob, &m) in dto.ids.iter().enumerate() {
        if m >= dto.mors.len() {
            return Err(format!("identity of object {ob} is out of range"));
        }
        b.identity(ob, m);
    }
    for &(g, f, gf) in &dto.comp {
        if g >= dto.mors.len() || f >= dto.mors.len() || gf >= dto.mors.len() {
            return Err("composition entry out of range".into());
        }
        b.compose(g, f, gf);
    }
    let cat = b.build();
    let violations = cat.validate_category();
    if violations.is_empty() {
        Ok(cat)
    } else {
        Err(format!("loaded table is not a category: {violations:?}"))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct FunctorDto {
    pub source: CategoryDto,
    pub target: CategoryDto,
    pub ob_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

pub fn functor_to_dto(f: &TableFunctor) -> FunctorDto {
    FunctorDto {
        source: category_to_dto(&f.source),
        target: category_to_dto(&f.target),
        ob_map: f.ob_map.clone(),
        mor_map: f.mor_map.clone(),
    }
}

pub fn functor_from_dto(dto: &FunctorDto) -> Result<TableFunctor, String> {
    let f = TableFunctor {
        source: Arc::new(category_from_dto(&dto.source)?),
        target: Arc::new(category_from_dto(&dto.target)?),
        ob_map: dto.ob_map.clone(),
        mor_map: dto.mor_map.clone(),
    };
    let violations = f.validate();
    if violations.is_empty() {
        Ok(f)
    } else {
        Err(format!("loaded table is not a functor: {violations:?}"))
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum TargetDto {
    Vect { p: u64 },
    PSet,
}

pub fn target_to_dto(t: Target) -> TargetDto {
    match t {
        Target::VectGF { p } => TargetDto::Vect { p },
        Target::PSet => TargetDto::PSet,
    }
}

pub fn target_from_dto(dto: TargetDto) -> Target {
    match dto {
        TargetDto::Vect { p } => Target::VectGF { p },
        TargetDto::PSet => Target::PSet,
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum ObDto {
    Dim(usize),
    Size(usize),
}

pub fn ob_to_dto(o: &Ob) -> ObDto {
    match o {
        Ob::Dim(d) => ObDto::Dim(*d),
        Ob::Size(s) => ObDto::Size(*s),
    }
}

pub fn ob_from_dto(dto: &ObDto) -> Ob {
    match dto {
        ObDto::Dim(d) => Ob::Dim(*d),
        ObDto::Size(s) => Ob::Size(*s),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum MorDto {
    Mat { p: u64, rows: usize, cols: usize, data: Vec<u64> },
    Fun { dom: usize, cod: usize, map: Vec<usize> },
}

pub fn mor_to_dto(m: &Mor) -> MorDto {
    match m {
        Mor::Mat(a) => {
            MorDto::Mat { p: a.p, rows: a.rows, cols: a.cols, data: a.data.clone() }
        }
        Mor::Fun(f) => MorDto::Fun { dom: f.dom, cod: f.cod, map: f.map.clone() },
    }
}

pub fn mor_from_dto(dto: &MorDto) -> Result<Mor, String> {
    match dto {
        MorDto::Mat { p, rows, cols, data } => {
            if data.len() != rows * cols {
                return Err("matrix data length must be rows*cols".into());
            }
            Ok(Mor::Mat(Matrix::new(*p, *rows, *cols, data.clone())))
        }
        MorDto::Fun { dom, cod, map } => {
            if map.len() != *dom || map.first() != Some(&0) || map.iter().any(|&v| v >= *cod) {
                return Err("pointed map must fix the basepoint and stay in range".into());
            }
            Ok(Mor::Fun(PFun::new(*dom, *cod, map.clone())))
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct DiagramDto {
    pub index: CategoryDto,
    pub target: TargetDto,
    pub obs: Vec<ObDto>,
    pub mors: Vec<MorDto>,
}

pub fn diagram_to_dto(d: &Diagram) -> DiagramDto {
    DiagramDto {
        index: category_to_dto(&d.index),
        target: target_to_dto(d.target),
        obs: d.obs.iter().map(ob_to_dto).collect(),
        mors: d.mors.iter().map(mor_to_dto).collect(),
    }
}

pub fn diagram_from_dto(dto: &DiagramDto) -> Result<Diagram, String> {
    let d = Diagram {
        index: Arc::new(category_from_dto(&dto.index)?),
        target: target_from_dto(dto.target),
        obs: dto.obs.iter().map(ob_from_dto).collect(),
        mors: dto.mors.iter().map(mor_from_dto).collect::<Result<_, _>>()?,
    };
    d.validate().map_err(|e| format!("loaded tables do not form a diagram: {e:?}"))?;
    Ok(d)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("DTOs are plain data")
}

pub fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T, String> {
    serde_json::from_str(s).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::{lambda_n, phi_n, pn};
    use crate::sampler::Sampler;

    #[test]
    fn categories_round_trip_through_json() {
        for cat in [pn(2), lambda_n(1)] {
            let dto = category_to_dto(&cat);
            let text = to_json(&dto);
            let back: CategoryDto = from_json(&text).expect("parses");
            let rebuilt = category_from_dto(&back).expect("rebuilds");
            assert_eq!(category_to_dto(&rebuilt), dto, "round trip is the identity on tables");
        }
    }

    #[test]
    fn functors_round_trip_through_json() {
        let phi = phi_n(2);
        let dto = functor_to_dto(&phi);
        let back: FunctorDto = from_json(&to_json(&dto)).expect("parses");
        let rebuilt = functor_from_dto(&back).expect("rebuilds");
        assert_eq!(rebuilt.ob_map, phi.ob_map);
        assert_eq!(rebuilt.mor_map, phi.mor_map);
    }

    #[test]
    fn sampled_diagrams_round_trip_through_json() {
        let mut s = Sampler::new(23);
        for t in [Target::VectGF { p: 3 }, Target::PSet] {
            let d = s.cube(t, 2, 2);
            let dto = diagram_to_dto(&d);
            let back: DiagramDto = from_json(&to_json(&dto)).expect("parses");
            let rebuilt = diagram_from_dto(&back).expect("rebuilds and validates");
            assert_eq!(rebuilt.obs, d.obs);
            assert_eq!(rebuilt.mors, d.mors);
        }
    }

    #[test]
    fn corrupted_payloads_are_rejected() {
        let bad_mat = MorDto::Mat { p: 2, rows: 2, cols: 2, data: vec![1, 0, 1] };
        assert!(mor_from_dto(&bad_mat).is_err(), "short matrix data is rejected");
        let bad_fun = MorDto::Fun { dom: 2, cod: 2, map: vec![1, 0] };
        assert!(mor_from_dto(&bad_fun).is_err(), "basepoint-moving map is rejected");
        let mut dto = category_to_dto(&pn(1));
        dto.comp.pop();
        let err = category_from_dto(&dto);
        assert!(err.is_err(), "a table missing a composition entry is not a category");
    }
}
