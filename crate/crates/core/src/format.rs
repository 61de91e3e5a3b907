//! JSON text formats for algebras and tensor-square operators.
//!
//! An algebra file looks like
//!
//! ```text
//! { "name": "dual-numbers", "field": "Q", "dim": 2, "basis": ["1","x"], "unit": ["1","0"],
//!   "constants": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]] }
//! ```
//!
//! where `constants[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::yang_baxter::{TensorSquareOperator, CONVENTION};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub constants: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorFile {
    pub convention: String,
    pub field: String,
    pub dim: usize,
    /// Row-major, side `dim²`.
    pub matrix: Vec<Vec<String>>,
}

fn parse_all(field: FieldSpec, items: &[String]) -> Result<Vec<Scalar>> {
    items.iter().map(|s| field.parse_scalar(s)).collect()
}

fn strings(items: &[Scalar]) -> Vec<String> {
    items.iter().map(Scalar::to_string).collect()
}

fn shape_error(what: &str, expected: usize, found: usize) -> Error {
    Error::Parse(format!("{what}: expected {expected} entries, found {found}"))
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> Self {
        let d = alg.dim();
        let constants = (0..d)
            .map(|i| (0..d).map(|j| strings(alg.tensor().product_of_basis(i, j))).collect())
            .collect();
        AlgebraFile {
            name: alg.name().to_string(),
            field: alg.field().to_string(),
            dim: d,
            basis: alg.basis().to_vec(),
            unit: alg.unit().map(|u| strings(u.coords())),
            constants,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let field: FieldSpec = self.field.parse()?;
        let d = self.dim;
        if self.basis.len() != d {
            return Err(shape_error("basis", d, self.basis.len()));
        }
        if self.constants.len() != d {
            return Err(shape_error("constants", d, self.constants.len()));
        }
        let mut entries = Vec::with_capacity(d * d * d);
        for (i, plane) in self.constants.iter().enumerate() {
            if plane.len() != d {
                return Err(shape_error(&format!("constants[{i}]"), d, plane.len()));
            }
            for (j, row) in plane.iter().enumerate() {
                if row.len() != d {
                    return Err(shape_error(&format!("constants[{i}][{j}]"), d, row.len()));
                }
                entries.extend(parse_all(field, row)?);
            }
        }
        let tensor = StructureTensor::from_entries(d, entries)?;
        let unit = match &self.unit {
            None => None,
            Some(u) => {
                if u.len() != d {
                    return Err(shape_error("unit", d, u.len()));
                }
                Some(Vector::new(field, parse_all(field, u)?))
            }
        };
        Algebra::new(self.name.clone(), field, self.basis.clone(), tensor, unit)
    }
}

impl OperatorFile {
    pub fn from_operator(op: &TensorSquareOperator) -> Self {
        let m = op.matrix();
        OperatorFile {
            convention: CONVENTION.to_string(),
            field: op.field().to_string(),
            dim: op.dim(),
            matrix: (0..m.rows()).map(|r| strings(m.row(r))).collect(),
        }
    }

    pub fn to_operator(&self) -> Result<TensorSquareOperator> {
        if self.convention != CONVENTION {
            return Err(Error::Parse(format!(
                "unknown operator convention {:?} (expected {CONVENTION:?})",
                self.convention
            )));
        }
        let field: FieldSpec = self.field.parse()?;
        let side = self.dim * self.dim;
        if self.matrix.len() != side {
            return Err(shape_error("matrix", side, self.matrix.len()));
        }
        let mut rows = Vec::with_capacity(side);
        for (r, row) in self.matrix.iter().enumerate() {
            if row.len() != side {
                return Err(shape_error(&format!("matrix[{r}]"), side, row.len()));
            }
            rows.push(parse_all(field, row)?);
        }
        TensorSquareOperator::new(self.dim, Matrix::from_rows(field, rows)?)
    }
}

pub fn load_algebra(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.to_algebra()
}

pub fn load_operator(text: &str) -> Result<TensorSquareOperator> {
    let file: OperatorFile = serde_json::from_str(text)?;
    file.to_operator()
}

/// One top-level key per line, values in compact JSON.
fn render_object<T: Serialize>(value: &T) -> String {
    let serde_json::Value::Object(map) = serde_json::to_value(value).expect("plain data serializes") else {
        unreachable!("structs serialize to objects")
    };
    let body: Vec<String> = map
        .iter()
        .map(|(k, v)| format!("  {}: {}", serde_json::Value::String(k.clone()), v))
        .collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

pub fn serialize_algebra(alg: &Algebra) -> String {
    render_object(&AlgebraFile::from_algebra(alg))
}

pub fn serialize_operator(op: &TensorSquareOperator) -> String {
    render_object(&OperatorFile::from_operator(op))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use proptest::prelude::*;

    const DUAL: &str = r#"{ "name": "dual-numbers", "field": "Q", "dim": 2, "basis": ["1","x"], "unit": ["1","0"], "constants": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]] }"#;

    #[test]
    fn loads_dual_numbers() {
        let alg = load_algebra(DUAL).unwrap();
        assert_eq!(alg.tensor(), corpus::dual_numbers(FieldSpec::Rationals).tensor());
        assert_eq!(alg.unit(), corpus::dual_numbers(FieldSpec::Rationals).unit());
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let text = DUAL.replace("\"Q\"", "\"F4\"");
        let err = load_algebra(&text).unwrap_err();
        assert!(err.to_string().contains("field modulus must be prime"));
    }

    #[test]
    fn bad_shapes_and_scalars() {
        let short = DUAL.replace(r#"[["0","1"],["0","0"]]"#, r#"[["0","1"]]"#);
        assert!(matches!(load_algebra(&short), Err(Error::Parse(_))));
        let bad = DUAL.replace(r#""unit": ["1","0"]"#, r#""unit": ["0","1"]"#);
        assert!(matches!(load_algebra(&bad), Err(Error::NotAUnit(_))));
        let half = DUAL.replace("\"Q\"", "\"F2\"").replace(r#"["0","0"]]]"#, r#"["1/2","0"]]]"#);
        assert!(matches!(load_algebra(&half), Err(Error::NotInField { .. })));
        assert!(matches!(load_algebra("{"), Err(Error::Json(_))));
    }

    #[test]
    fn corpus_round_trips() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(5).unwrap()] {
            for alg in corpus::all(field) {
                let back = load_algebra(&serialize_algebra(&alg)).unwrap();
                assert_eq!(back.tensor(), alg.tensor());
                assert_eq!(back.unit(), alg.unit());
                assert_eq!(back.basis(), alg.basis());
                assert_eq!(back.name(), alg.name());
            }
        }
    }

    #[test]
    fn operator_round_trip() {
        let q = FieldSpec::Rationals;
        let op = crate::yang_baxter::twist(q, 2);
        let text = serialize_operator(&op);
        assert!(text.contains("\"convention\": \"column-major-basis-image\""));
        assert_eq!(load_operator(&text).unwrap(), op);
        let wrong = text.replace("column-major-basis-image", "row-major");
        assert!(load_operator(&wrong).is_err());
    }

    proptest! {
        #[test]
        fn random_tensors_round_trip(entries in proptest::collection::vec(-20i64..20, 8), den in 1i64..6) {
            let q = FieldSpec::Rationals;
            let scalars = entries.iter().map(|&n| q.parse_scalar(&format!("{n}/{den}")).unwrap()).collect();
            let t = StructureTensor::from_entries(2, scalars).unwrap();
            let alg = Algebra::new("r", q, vec!["u".into(), "v".into()], t, None).unwrap();
            let back = load_algebra(&serialize_algebra(&alg)).unwrap();
            prop_assert_eq!(back.tensor(), alg.tensor());
        }
    }
}
