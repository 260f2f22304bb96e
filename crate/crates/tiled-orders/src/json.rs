//! Wire formats. Field names are frozen; integers only, emitted bit-exactly.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gorenstein::GorensteinData;
use crate::homology::HomologicalReport;
use crate::matrix::{ExponentMatrix, Permutation};
use crate::poset::{FinitePoset, HasseQuiver};

/// Matrix wire form: `{"size": n, "d": [[...], ...]}`. Deserialization does
/// not validate the quasi-metric axioms, so invalid matrices can be fed to
/// the validation report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawMatrix {
    pub size: usize,
    pub d: Vec<Vec<i64>>,
}

impl RawMatrix {
    pub fn into_matrix(self) -> Result<ExponentMatrix> {
        ExponentMatrix::new(self.d)
    }
}

impl From<&ExponentMatrix> for RawMatrix {
    fn from(m: &ExponentMatrix) -> Self {
        RawMatrix {
            size: m.size(),
            d: m.rows(),
        }
    }
}

/// Poset wire form: `{"elements": [...], "relations": [[a, b], ...]}` with
/// `[a, b]` meaning `a <= b`. Emission lists the covering pairs, which
/// regenerate the order by closure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
}

impl PosetJson {
    pub fn into_poset(self) -> Result<FinitePoset> {
        FinitePoset::from_relations(self.elements, &self.relations)
    }
}

impl From<&FinitePoset> for PosetJson {
    fn from(p: &FinitePoset) -> Self {
        let labels = p.labels();
        let relations = p
            .hasse()
            .arrows()
            .iter()
            .map(|&(x, y)| (labels[y].clone(), labels[x].clone()))
            .collect();
        PosetJson {
            elements: labels.to_vec(),
            relations,
        }
    }
}

/// Quiver wire form: `{"vertices": [...], "arrows": [[a, b], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

impl QuiverJson {
    pub fn into_quiver(self) -> Result<HasseQuiver> {
        HasseQuiver::new(self.vertices, &self.arrows)
    }
}

/// Nakayama data wire form: `{"nu": [...], "b": [...], "p": [...]}` with
/// one-based images.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GorensteinJson {
    pub nu: Vec<usize>,
    pub b: Vec<i64>,
    pub p: Vec<i64>,
}

impl GorensteinJson {
    pub fn into_data(self) -> Result<GorensteinData> {
        Ok(GorensteinData {
            nu: Permutation::from_one_based(&self.nu)?,
            b: self.b,
            p: self.p,
        })
    }
}

impl From<&GorensteinData> for GorensteinJson {
    fn from(g: &GorensteinData) -> Self {
        GorensteinJson {
            nu: g.nu.one_based(),
            b: g.b.clone(),
            p: g.p.clone(),
        }
    }
}

/// Homology wire form: projective dimensions keyed by element label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomologyJson {
    pub proj_dims: std::collections::BTreeMap<String, usize>,
    pub global_dimension: usize,
}

impl HomologyJson {
    pub fn new(p: &FinitePoset, report: &HomologicalReport) -> Self {
        HomologyJson {
            proj_dims: p
                .labels()
                .iter()
                .cloned()
                .zip(report.proj_dims.iter().copied())
                .collect(),
            global_dimension: report.global_dimension,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = ExponentMatrix::new(vec![vec![0, 2], vec![1, 0]]).unwrap();
        let text = serde_json::to_string(&RawMatrix::from(&m)).unwrap();
        assert_eq!(text, r#"{"size":2,"d":[[0,2],[1,0]]}"#);
        let parsed: RawMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.into_matrix().unwrap(), m);
    }

    #[test]
    fn poset_round_trip_through_covering_pairs() {
        let p = FinitePoset::chain(2).product(&FinitePoset::chain(3));
        let text = serde_json::to_string(&PosetJson::from(&p)).unwrap();
        let parsed: PosetJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.into_poset().unwrap(), p);
    }

    #[test]
    fn gorenstein_wire_is_one_based() {
        let g = crate::gorenstein::nakayama(
            &ExponentMatrix::new(vec![vec![0, 2], vec![1, 0]]).unwrap(),
        )
        .unwrap()
        .unwrap();
        let text = serde_json::to_string(&GorensteinJson::from(&g)).unwrap();
        assert_eq!(text, r#"{"nu":[2,1],"b":[1,2],"p":[0,-1]}"#);
    }
}
