//! JSON file formats.
//!
//! Prime-field scalars are written as integers in `0..p`, rationals as strings
//! `"a/b"` (or `"a"` when integral). On input either form is accepted in any
//! field. Index tuples in reports are 1-based.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::StructAlgebra;
use crate::coalgebra::StructCoalgebra;
use crate::error::{Error, Result};
use crate::families::{Cocycle2, GroupTable, IdempotentMap, ThetaMap};
use crate::matrix::DenseMatrix;
use crate::module::ModuleRep;
use crate::scalar::{Field, Scalar};
use crate::tensor::FsTensor;
use crate::verify::CheckReport;

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Mod { v, .. } => json!(v),
        Scalar::Rat(_) => json!(s.to_string()),
    }
}

pub fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.int(i)),
            None => Err(Error::InvalidInput(format!("scalar {n} is not an integer"))),
        },
        Value::String(s) => field.parse(s),
        other => Err(Error::InvalidInput(format!("expected a scalar, found {other}"))),
    }
}

pub fn scalars_to_json(v: &[Scalar]) -> Vec<Value> {
    v.iter().map(scalar_to_json).collect()
}

pub fn scalars_from_json(field: Field, v: &[Value]) -> Result<Vec<Scalar>> {
    v.iter().map(|x| scalar_from_json(field, x)).collect()
}

pub fn matrix_to_json(m: &DenseMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(scalars_to_json(m.row(r)))).collect())
}

pub fn matrix_from_json(field: Field, v: &Value) -> Result<DenseMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("expected an array of rows".into()))?;
    let rows: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::InvalidInput("expected a row array".into()))
                .and_then(|r| scalars_from_json(field, r))
        })
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("matrix rows differ in length".into()));
    }
    Ok(DenseMatrix::from_rows(field, rows))
}

/// Adds 1 to every index of a witness.
pub fn report_to_json(r: &CheckReport) -> Value {
    match &r.witness {
        None => json!({ "passed": r.passed }),
        Some(w) => json!({
            "passed": r.passed,
            "witness": {
                "indices": w.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "lhs": scalar_to_json(&w.lhs),
                "rhs": scalar_to_json(&w.rhs),
            }
        }),
    }
}

/// Canonical text: pretty-printed with sorted keys and a trailing newline.
pub fn to_canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn field_checked(f: Field, expected: Option<Field>) -> Result<Field> {
    let f = f.validate()?;
    match expected {
        Some(e) if e != f => Err(Error::FieldMismatch {
            expected: e.to_string(),
            found: f.to_string(),
        }),
        _ => Ok(f),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    n: usize,
    field: Field,
    entries: Vec<Value>,
}

pub fn tensor_to_json(t: &FsTensor) -> Value {
    serde_json::to_value(TensorFile {
        n: t.n(),
        field: t.field(),
        entries: scalars_to_json(t.entries()),
    })
    .expect("serializable")
}

/// Parses a tensor file; `expected` rejects a file over a different field.
pub fn tensor_from_json(v: &Value, expected: Option<Field>) -> Result<FsTensor> {
    let file: TensorFile = serde_json::from_value(v.clone())?;
    let f = field_checked(file.field, expected)?;
    FsTensor::new(file.n, f, scalars_from_json(f, &file.entries)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    field: Field,
    mul: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Value>>,
}

pub fn algebra_to_json(a: &StructAlgebra) -> Value {
    serde_json::to_value(AlgebraFile {
        dim: a.dim(),
        field: a.field(),
        mul: scalars_to_json(a.mul_table()),
        unit: a.unit().map(scalars_to_json),
    })
    .expect("serializable")
}

pub fn algebra_from_json(v: &Value, expected: Option<Field>) -> Result<StructAlgebra> {
    let file: AlgebraFile = serde_json::from_value(v.clone())?;
    let f = field_checked(file.field, expected)?;
    let unit = file.unit.map(|u| scalars_from_json(f, &u)).transpose()?;
    StructAlgebra::new(file.dim, f, scalars_from_json(f, &file.mul)?, unit)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoalgebraFile {
    dim: usize,
    field: Field,
    comul: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<Vec<Value>>,
}

pub fn coalgebra_to_json(c: &StructCoalgebra) -> Value {
    serde_json::to_value(CoalgebraFile {
        dim: c.dim(),
        field: c.field(),
        comul: scalars_to_json(c.comul_table()),
        counit: c.counit().map(scalars_to_json),
    })
    .expect("serializable")
}

pub fn coalgebra_from_json(v: &Value, expected: Option<Field>) -> Result<StructCoalgebra> {
    let file: CoalgebraFile = serde_json::from_value(v.clone())?;
    let f = field_checked(file.field, expected)?;
    let counit = file.counit.map(|u| scalars_from_json(f, &u)).transpose()?;
    StructCoalgebra::new(file.dim, f, scalars_from_json(f, &file.comul)?, counit)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    dim: usize,
    field: Field,
    algebra_dim: usize,
    #[serde(default)]
    action: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coaction: Option<Vec<Value>>,
}

pub fn module_to_json(m: &ModuleRep) -> Value {
    serde_json::to_value(ModuleFile {
        dim: m.dim(),
        field: m.field(),
        algebra_dim: m.algebra_dim(),
        action: m.action().iter().map(matrix_to_json).collect(),
        coaction: m.coaction().map(scalars_to_json),
    })
    .expect("serializable")
}

pub fn module_from_json(v: &Value, expected: Option<Field>) -> Result<ModuleRep> {
    let file: ModuleFile = serde_json::from_value(v.clone())?;
    let f = field_checked(file.field, expected)?;
    let action = file
        .action
        .iter()
        .map(|m| matrix_from_json(f, m))
        .collect::<Result<_>>()?;
    let coaction = file.coaction.map(|c| scalars_from_json(f, &c)).transpose()?;
    ModuleRep::new(f, file.dim, file.algebra_dim, action, coaction)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

pub fn group_to_json(g: &GroupTable) -> Value {
    serde_json::to_value(GroupFile {
        order: g.order(),
        table: g.table().to_vec(),
    })
    .expect("serializable")
}

/// Group elements are `0..order` with identity `0`.
pub fn group_from_json(v: &Value) -> Result<GroupTable> {
    let file: GroupFile = serde_json::from_value(v.clone())?;
    if file.table.len() != file.order {
        return Err(Error::Dimension(format!(
            "table has {} rows, order is {}",
            file.table.len(),
            file.order
        )));
    }
    GroupTable::new(file.table)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CocycleFile {
    entries: Value,
}

pub fn cocycle_from_json(v: &Value, g: &GroupTable, field: Field) -> Result<Cocycle2> {
    let file: CocycleFile = serde_json::from_value(v.clone())?;
    Cocycle2::new(g, matrix_from_json(field, &file.entries)?)
}

pub fn cocycle_to_json(c: &Cocycle2) -> Value {
    json!({ "entries": matrix_to_json(c.matrix()) })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ThetaFile {
    n: usize,
    table: Vec<usize>,
}

/// `table` is flat at `(i·n + j)·n + k` with values in `0..n`.
pub fn theta_from_json(v: &Value) -> Result<ThetaMap> {
    let file: ThetaFile = serde_json::from_value(v.clone())?;
    ThetaMap::new(file.n, file.table)
}

pub fn theta_to_json(t: &ThetaMap) -> Value {
    serde_json::to_value(ThetaFile {
        n: t.n(),
        table: t.table().to_vec(),
    })
    .expect("serializable")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhiFile {
    n: usize,
    map: Vec<usize>,
}

/// `map[i] = φ(i)` with values in `0..n`.
pub fn phi_from_json(v: &Value) -> Result<IdempotentMap> {
    let file: PhiFile = serde_json::from_value(v.clone())?;
    if file.map.len() != file.n {
        return Err(Error::Dimension(format!(
            "map has {} entries, n is {}",
            file.map.len(),
            file.n
        )));
    }
    IdempotentMap::new(file.map)
}

pub fn phi_to_json(m: &IdempotentMap) -> Value {
    serde_json::to_value(PhiFile {
        n: m.n(),
        map: m.map().to_vec(),
    })
    .expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_round_trip() {
        for f in [Field::gf(3), Field::Rational] {
            let t = FsTensor::switch(2, f).scale(&f.ratio(1, 2).unwrap());
            let v = tensor_to_json(&t);
            assert_eq!(tensor_from_json(&v, None).unwrap(), t);
            let text = to_canonical(&v);
            let back: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(to_canonical(&back), text);
        }
    }

    #[test]
    fn field_mismatch_is_reported() {
        let v = tensor_to_json(&FsTensor::identity(2, Field::gf(2)));
        assert!(matches!(
            tensor_from_json(&v, Some(Field::gf(3))),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn rational_entries_are_strings() {
        let f = Field::Rational;
        let v = scalar_to_json(&f.ratio(-3, 6).unwrap());
        assert_eq!(v, json!("-1/2"));
        assert_eq!(scalar_from_json(f, &json!(4)).unwrap(), f.int(4));
        assert_eq!(
            scalar_from_json(Field::gf(5), &json!("1/2")).unwrap(),
            Field::gf(5).int(3)
        );
    }

    #[test]
    fn structures_round_trip() {
        let f = Field::gf(3);
        let a = StructAlgebra::matrix(2, f);
        assert_eq!(algebra_from_json(&algebra_to_json(&a), None).unwrap(), a);
        let c = StructCoalgebra::comatrix(2, f);
        assert_eq!(coalgebra_from_json(&coalgebra_to_json(&c), None).unwrap(), c);
        let m = ModuleRep::column(2, f);
        assert_eq!(module_from_json(&module_to_json(&m), None).unwrap(), m);
        let g = GroupTable::symmetric3();
        assert_eq!(group_from_json(&group_to_json(&g)).unwrap(), g);
    }
}
