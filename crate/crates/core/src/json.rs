//! Byte-stable JSON for tableaux, puzzles and query results.
//!
//! A tableau is `{"outer": [...], "inner": [...], "rows": [[cell|null, ...], ...]}`.
//! Row `r` lists the columns of the outer shape from the row's first column,
//! with `null` for inner cells. Cells are `{"v": 3}` (increasing),
//! `{"v": 1, "g": 2}` (genomic), `{"set": [1, 2]}` (set-valued) or
//! `{"v": 1, "g": 2, "primed": true}` (shifted genomic). Shifted shapes carry
//! `"shifted": true`. Object keys are sorted, so output for equal inputs is
//! identical byte for byte.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lr::LRResult;
use crate::puzzles::Puzzle;
use crate::schur::{SchurExpansion, TransitionMatrix};
use crate::shapes::{Cell, Diagram, Partition, ShiftedSkewShape, SkewShape};
use crate::shifted::{DLetter, Kind, LGReport, OGResult, ShiftedGenomicTableau};
use crate::tableaux::{GenomicTableau, SetValuedTableau, Tableau};

fn grid<D: Diagram>(shape: &D, mut cell: impl FnMut(Cell) -> Option<Value>) -> Value {
    let rows: Vec<Value> = (1..=shape.num_rows())
        .map(|r| {
            let s = shape.row_start(r);
            let row: Vec<Value> =
                (s..s + shape.outer_len(r)).map(|c| cell(Cell::new(r, c)).unwrap_or(Value::Null)).collect();
            Value::Array(row)
        })
        .collect();
    let mut m = Map::new();
    m.insert("outer".into(), json!(shape.outer_parts()));
    m.insert("inner".into(), json!(shape.inner_parts()));
    m.insert("rows".into(), Value::Array(rows));
    if D::SHIFTED {
        m.insert("shifted".into(), Value::Bool(true));
    }
    Value::Object(m)
}

pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl<D: Diagram> ToJson for Tableau<D> {
    fn to_json(&self) -> Value {
        grid(self.shape(), |c| self.get(c).map(|v| json!({ "v": v })))
    }
}

impl ToJson for GenomicTableau {
    fn to_json(&self) -> Value {
        grid(self.shape(), |c| self.get(c).map(|x| json!({ "v": x.value, "g": x.gene })))
    }
}

impl ToJson for SetValuedTableau {
    fn to_json(&self) -> Value {
        grid(self.shape(), |c| self.get(c).map(|s| json!({ "set": s })))
    }
}

impl ToJson for ShiftedGenomicTableau {
    fn to_json(&self) -> Value {
        let mut v = grid(self.shape(), |c| {
            self.get(c).map(|x| json!({ "v": x.letter.value, "g": x.gene, "primed": x.letter.primed }))
        });
        v["kind"] = json!(self.kind());
        v
    }
}

impl ToJson for Puzzle {
    fn to_json(&self) -> Value {
        let picture: Vec<String> = self.to_string().lines().map(str::to_string).collect();
        json!({ "side": self.side, "k_pieces": self.k_pieces(), "picture": picture })
    }
}

fn list<T: ToJson>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(ToJson::to_json).collect())
}

impl ToJson for LRResult {
    fn to_json(&self) -> Value {
        let mut v = json!({
            "query": self.query,
            "sign": self.sign,
            "counts": self.counts,
            "coefficient": self.coefficient,
        });
        if let Some(w) = &self.witnesses {
            v["witnesses"] = json!({
                "ballot": list(&w.ballot),
                "rect": list(&w.rect),
                "buch": list(&w.buch),
                "puzzle": list(&w.puzzle),
            });
        }
        v
    }
}

impl ToJson for OGResult {
    fn to_json(&self) -> Value {
        let mut v = json!({
            "query": self.query,
            "sign": self.sign,
            "pballot": self.pballot,
            "ctyrect": self.ctyrect,
            "coefficient": self.coefficient,
        });
        if let Some(w) = &self.witnesses {
            v["witnesses"] = list(w);
        }
        v
    }
}

impl ToJson for LGReport {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain struct")
    }
}

/// Terms of a Schur expansion, largest degree first.
pub fn expansion_json(e: &SchurExpansion) -> Value {
    let mut terms: Vec<(&Partition, &i64)> = e.iter().filter(|(_, &c)| c != 0).collect();
    terms.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then(b.0.cmp(a.0)));
    Value::Array(terms.into_iter().map(|(p, c)| json!({ "shape": p, "coeff": c })).collect())
}

impl ToJson for TransitionMatrix {
    fn to_json(&self) -> Value {
        json!({ "nvars": self.nvars, "shapes": self.shapes, "entries": self.entries })
    }
}

/// Render with sorted keys and no trailing whitespace.
pub fn to_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values always serialize")
}

pub fn to_string_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

/// Machine-readable error payload.
pub fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::InvalidPartition(_) => "invalid_partition",
        Error::InvalidShape(_) => "invalid_shape",
        Error::ShapeTooLarge { .. } => "shape_too_large",
        Error::InvalidTableau(_) => "invalid_tableau",
        Error::InvalidCorner(_) => "invalid_corner",
        Error::NotPieriFilled(_) => "not_pieri_filled",
        Error::Parse(_) => "parse",
        Error::Malformed(_) => "malformed",
        Error::CrossCheck(_) => "cross_check",
        Error::NotSymmetric => "not_symmetric",
        Error::NonPartitionLeadingTerm(_) => "non_partition_leading_term",
        Error::Overflow => "overflow",
    };
    json!({ "error": kind, "message": e.to_string() })
}

/// A tableau read back from JSON, by cell type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTableau {
    Increasing(Tableau<SkewShape>),
    ShiftedIncreasing(Tableau<ShiftedSkewShape>),
    Genomic(GenomicTableau),
    ShiftedGenomic(ShiftedGenomicTableau),
    SetValued(SetValuedTableau),
}

impl ToJson for AnyTableau {
    fn to_json(&self) -> Value {
        match self {
            AnyTableau::Increasing(t) => t.to_json(),
            AnyTableau::ShiftedIncreasing(t) => t.to_json(),
            AnyTableau::Genomic(t) => t.to_json(),
            AnyTableau::ShiftedGenomic(t) => t.to_json(),
            AnyTableau::SetValued(t) => t.to_json(),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn parts(v: &Value, key: &str) -> Result<Vec<usize>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(x) => serde_json::from_value(x.clone()).map_err(|e| bad(format!("{key}: {e}"))),
    }
}

fn uint(cell: &Value, key: &str) -> Result<Option<u32>> {
    match cell.get(key) {
        None => Ok(None),
        Some(x) => x
            .as_u64()
            .and_then(|n| u32::try_from(n).ok())
            .map(Some)
            .ok_or_else(|| bad(format!("{key:?} must be a non-negative integer"))),
    }
}

/// Parse the tableau schema above. The cell keys decide the tableau type.
pub fn parse_tableau(v: &Value) -> Result<AnyTableau> {
    let outer = parts(v, "outer")?;
    let inner = parts(v, "inner")?;
    let shifted = v.get("shifted").and_then(Value::as_bool).unwrap_or(false);
    let rows = v.get("rows").and_then(Value::as_array).ok_or_else(|| bad("missing \"rows\" array"))?;
    let mut cells: Vec<(Cell, &Value)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let r = i + 1;
        let row = row.as_array().ok_or_else(|| bad(format!("row {r} is not an array")))?;
        let start = if shifted { r } else { 1 };
        for (j, x) in row.iter().enumerate() {
            if !x.is_null() {
                cells.push((Cell::new(r, start + j), x));
            }
        }
    }
    let has = |k: &str| cells.iter().any(|(_, x)| x.get(k).is_some());
    if shifted {
        let shape = ShiftedSkewShape::from_parts(outer, inner)?;
        if has("g") {
            let kind: Kind = match v.get("kind") {
                Some(k) => serde_json::from_value(k.clone()).map_err(|e| bad(format!("kind: {e}")))?,
                None => Kind::P,
            };
            let mut out = Vec::new();
            for (c, x) in cells {
                let value = uint(x, "v")?.ok_or_else(|| bad("cell without \"v\""))?;
                let gene = uint(x, "g")?.ok_or_else(|| bad("cell without \"g\""))?;
                let primed = x.get("primed").and_then(Value::as_bool).unwrap_or(false);
                out.push((c, DLetter { value, primed }, gene));
            }
            return Ok(AnyTableau::ShiftedGenomic(ShiftedGenomicTableau::new(shape, kind, out)?));
        }
        let vals = cells.into_iter().map(|(c, x)| Ok((c, uint(x, "v")?.ok_or_else(|| bad("cell without \"v\""))?)));
        return Ok(AnyTableau::ShiftedIncreasing(Tableau::from_cells(shape, vals.collect::<Result<Vec<_>>>()?)?));
    }
    let shape = SkewShape::from_parts(outer, inner)?;
    if has("set") {
        let mut out = Vec::new();
        for (c, x) in cells {
            let set: Vec<u32> = serde_json::from_value(x.get("set").cloned().unwrap_or(Value::Null))
                .map_err(|e| bad(format!("set: {e}")))?;
            out.push((c, set));
        }
        return Ok(AnyTableau::SetValued(SetValuedTableau::new(shape, out)?));
    }
    if has("g") {
        let mut out = Vec::new();
        for (c, x) in cells {
            let value = uint(x, "v")?.ok_or_else(|| bad("cell without \"v\""))?;
            let gene = uint(x, "g")?.ok_or_else(|| bad("cell without \"g\""))?;
            out.push((c, value, gene));
        }
        return Ok(AnyTableau::Genomic(GenomicTableau::new(shape, out)?));
    }
    let vals = cells.into_iter().map(|(c, x)| Ok((c, uint(x, "v")?.ok_or_else(|| bad("cell without \"v\""))?)));
    Ok(AnyTableau::Increasing(Tableau::from_cells(shape, vals.collect::<Result<Vec<_>>>()?)?))
}

pub fn parse_tableau_str(s: &str) -> Result<AnyTableau> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(format!("tableau JSON: {e}")))?;
    parse_tableau(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shifted::{og_coefficient, OGQuery};
    use crate::tableaux::superstandard;

    #[test]
    fn increasing_layout() {
        let t = Tableau::from_rows(SkewShape::new("3,2".parse().unwrap(), "1".parse().unwrap()).unwrap(), vec![
            vec![1, 2],
            vec![2, 3],
        ])
        .unwrap();
        let s = to_string(&t.to_json());
        assert_eq!(s, r#"{"inner":[1],"outer":[3,2],"rows":[[null,{"v":1},{"v":2}],[{"v":2},{"v":3}]]}"#);
        assert_eq!(parse_tableau_str(&s).unwrap(), AnyTableau::Increasing(t));
    }

    #[test]
    fn genomic_and_set_valued_round_trip() {
        let g = GenomicTableau::highest_weight(&"3,1".parse().unwrap());
        let back = parse_tableau(&g.to_json()).unwrap();
        assert_eq!(back, AnyTableau::Genomic(g));
        let sv = SetValuedTableau::new(SkewShape::straight("2".parse().unwrap()), [
            (Cell::new(1, 1), vec![1, 2]),
            (Cell::new(1, 2), vec![2]),
        ])
        .unwrap();
        let s = to_string(&sv.to_json());
        assert!(s.contains(r#"{"set":[1,2]}"#));
        assert_eq!(parse_tableau_str(&s).unwrap(), AnyTableau::SetValued(sv));
        assert_eq!(superstandard(&"2".parse().unwrap()).to_json()["rows"][0][1], json!({"v": 2}));
    }

    #[test]
    fn shifted_witnesses_are_stable() {
        let q = OGQuery::new("3,1".parse().unwrap(), "3,1".parse().unwrap(), "5,3,1".parse().unwrap());
        let a = to_string(&og_coefficient(&q, true).unwrap().to_json());
        let b = to_string(&og_coefficient(&q, true).unwrap().to_json());
        assert_eq!(a, b);
        assert!(a.contains(r#""primed":true"#) && a.contains(r#""shifted":true"#));
        let r = og_coefficient(&q, true).unwrap();
        for t in r.witnesses.unwrap() {
            assert_eq!(parse_tableau(&t.to_json()).unwrap(), AnyTableau::ShiftedGenomic(t));
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_tableau_str("[").is_err());
        assert!(parse_tableau_str(r#"{"outer":[2]}"#).is_err());
        assert!(parse_tableau_str(r#"{"outer":[2],"rows":[[{"v":1}]]}"#).is_err());
        assert!(parse_tableau_str(r#"{"outer":[2],"rows":[[{"v":1,"g":1},{"v":1,"g":1}]]}"#).is_err());
        assert!(matches!(error_json(&Error::Overflow)["error"].as_str(), Some("overflow")));
    }
}
