//! Tensor document input/output.
//!
//! A document is a JSON object with `order` (always 3), `dim` (2 or 3)
//! and `entries`: either a map from nondecreasing index strings ("112")
//! to integers or `"p/q"` strings, or a full row-major array (8 or 27
//! values) that is symmetry-validated. Missing map entries default to 0;
//! floats are rejected to keep everything exact.

use std::collections::BTreeMap;
use std::io::Read;

use serde::Deserialize;
use serde_json::Value;

use crate::rational::{format_rational, int, parse_rational, Rat};
use crate::tensor::{SymTensor2, SymTensor3};
use crate::Error;

#[derive(Debug, Clone, Deserialize)]
pub struct TensorDocument {
    pub order: u32,
    pub dim: u32,
    pub entries: Value,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn value_to_rat(field: &str, v: &Value) -> Result<Rat, Error> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| doc_err(format!("entry {field}: expected integer or \"p/q\" string, got non-integer number {n}"))),
        Value::String(s) => parse_rational(s)
            .map_err(|e| doc_err(format!("entry {field}: {e}"))),
        other => Err(doc_err(format!(
            "entry {field}: expected integer or \"p/q\" string, got {other}"
        ))),
    }
}

/// Canonical nondecreasing index strings, in the entry order used by
/// `SymTensor3::entries`.
pub const KEYS3: [&str; 10] = [
    "111", "222", "333", "112", "122", "113", "133", "223", "233", "123",
];
pub const KEYS2: [&str; 4] = ["111", "112", "122", "222"];

fn normalize_key(key: &str, dim: u32) -> Result<String, Error> {
    let mut digits: Vec<u32> = Vec::with_capacity(3);
    for ch in key.chars() {
        let d = ch
            .to_digit(10)
            .filter(|d| *d >= 1 && *d <= dim)
            .ok_or_else(|| doc_err(format!("entry key {key:?}: digits must lie in 1..={dim}")))?;
        digits.push(d);
    }
    if digits.len() != 3 {
        return Err(doc_err(format!("entry key {key:?}: expected exactly 3 digits")));
    }
    digits.sort_unstable();
    Ok(digits.iter().map(|d| d.to_string()).collect())
}

impl TensorDocument {
    pub fn from_str(text: &str) -> Result<Self, Error> {
        let doc: TensorDocument =
            serde_json::from_str(text).map_err(|e| doc_err(format!("invalid document: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn from_reader(mut r: impl Read) -> Result<Self, Error> {
        let mut buf = String::new();
        r.read_to_string(&mut buf)
            .map_err(|e| doc_err(format!("read failure: {e}")))?;
        Self::from_str(&buf)
    }

    fn validate(&self) -> Result<(), Error> {
        if self.order != 3 {
            return Err(doc_err(format!("order: expected 3, got {}", self.order)));
        }
        if self.dim != 2 && self.dim != 3 {
            return Err(doc_err(format!("dim: expected 2 or 3, got {}", self.dim)));
        }
        Ok(())
    }

    /// Unique entries keyed by canonical index string, with map keys
    /// normalized (sorted digits) and duplicate keys that disagree
    /// rejected.
    fn unique_entries(&self) -> Result<BTreeMap<String, Rat>, Error> {
        match &self.entries {
            Value::Object(map) => {
                let mut out: BTreeMap<String, Rat> = BTreeMap::new();
                for (key, v) in map {
                    let canon = normalize_key(key, self.dim)?;
                    let r = value_to_rat(key, v)?;
                    if let Some(prev) = out.get(&canon) {
                        if *prev != r {
                            return Err(doc_err(format!(
                                "entry {key}: conflicts with an earlier symmetric entry for {canon}"
                            )));
                        }
                    }
                    out.insert(canon, r);
                }
                Ok(out)
            }
            Value::Array(values) => {
                let expected = 3usize.pow(self.dim);
                if values.len() != expected {
                    return Err(doc_err(format!(
                        "entries: full array for dim {} must have {} values, got {}",
                        self.dim,
                        expected,
                        values.len()
                    )));
                }
                let mut out: BTreeMap<String, Rat> = BTreeMap::new();
                let d = self.dim as usize;
                for (pos, v) in values.iter().enumerate() {
                    let (i, j, k) = (pos / (d * d) + 1, (pos / d) % d + 1, pos % d + 1);
                    let field = format!("{i}{j}{k}");
                    let canon = normalize_key(&field, self.dim)?;
                    let r = value_to_rat(&field, v)?;
                    if let Some(prev) = out.get(&canon) {
                        if *prev != r {
                            return Err(doc_err(format!(
                                "entry {field}: breaks symmetry (conflicts with {canon})"
                            )));
                        }
                    }
                    out.insert(canon, r);
                }
                Ok(out)
            }
            other => Err(doc_err(format!(
                "entries: expected a map or a full array, got {other}"
            ))),
        }
    }

    pub fn to_tensor3(&self) -> Result<SymTensor3, Error> {
        if self.dim != 3 {
            return Err(doc_err(format!("dim: expected 3, got {}", self.dim)));
        }
        let map = self.unique_entries()?;
        let e: Vec<Rat> = KEYS3
            .iter()
            .map(|k| map.get(*k).cloned().unwrap_or_else(|| int(0)))
            .collect();
        Ok(SymTensor3::from_entries(
            e.try_into().expect("10 canonical keys"),
        ))
    }

    pub fn to_tensor2(&self) -> Result<SymTensor2, Error> {
        if self.dim != 2 {
            return Err(doc_err(format!("dim: expected 2, got {}", self.dim)));
        }
        let map = self.unique_entries()?;
        let get = |k: &str| map.get(k).cloned().unwrap_or_else(|| int(0));
        Ok(SymTensor2::new(
            get("111"),
            get("112"),
            get("122"),
            get("222"),
        ))
    }

    pub fn from_tensor3(t: &SymTensor3) -> Self {
        let mut map = serde_json::Map::new();
        for (k, v) in KEYS3.iter().zip(t.entries()) {
            map.insert(k.to_string(), Value::String(format_rational(&v)));
        }
        TensorDocument {
            order: 3,
            dim: 3,
            entries: Value::Object(map),
        }
    }

    pub fn from_tensor2(t: &SymTensor2) -> Self {
        let mut map = serde_json::Map::new();
        for (k, v) in KEYS2.iter().zip(t.entries()) {
            map.insert(k.to_string(), Value::String(format_rational(&v)));
        }
        TensorDocument {
            order: 3,
            dim: 2,
            entries: Value::Object(map),
        }
    }

    /// Canonical JSON text: keys in the fixed canonical order, rationals
    /// as `"p/q"` strings.
    pub fn to_json(&self) -> String {
        let mut root = serde_json::Map::new();
        root.insert("order".into(), Value::from(self.order));
        root.insert("dim".into(), Value::from(self.dim));
        root.insert("entries".into(), self.entries.clone());
        serde_json::to_string(&Value::Object(root)).expect("document serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn map_document_roundtrip() {
        let text = r#"{"order":3,"dim":3,"entries":{"113":"-1","123":-1,"122":1,
            "133":1,"111":1,"222":1,"333":1,"223":1,"233":1}}"#;
        let doc = TensorDocument::from_str(text).unwrap();
        let t = doc.to_tensor3().unwrap();
        assert_eq!(t.a112, int(0)); // missing entry defaults to 0
        assert_eq!(t.a113, int(-1));
        let back = TensorDocument::from_tensor3(&t);
        let t2 = TensorDocument::from_str(&back.to_json())
            .unwrap()
            .to_tensor3()
            .unwrap();
        assert_eq!(t.entries(), t2.entries());
    }

    #[test]
    fn unsorted_keys_and_rationals() {
        let text = r#"{"order":3,"dim":3,"entries":{"311":"-3/2","131":"-3/2","111":2}}"#;
        let t = TensorDocument::from_str(text).unwrap().to_tensor3().unwrap();
        assert_eq!(t.a113, rat(-3, 2));
        assert_eq!(t.a111, int(2));
    }

    #[test]
    fn conflicting_symmetric_entries_rejected() {
        let text = r#"{"order":3,"dim":3,"entries":{"112":1,"121":-1}}"#;
        let err = TensorDocument::from_str(text).unwrap().to_tensor3().unwrap_err();
        assert!(err.to_string().contains("121"), "{err}");
    }

    #[test]
    fn full_array_input() {
        // (x1+x2+x3)^3: all 27 positions equal 1
        let values = vec![1; 27];
        let text = format!(
            r#"{{"order":3,"dim":3,"entries":{}}}"#,
            serde_json::to_string(&values).unwrap()
        );
        let t = TensorDocument::from_str(&text).unwrap().to_tensor3().unwrap();
        assert!(t.entries().iter().all(|v| **v == int(1)));

        let mut bad = vec![1; 27];
        bad[1] = 2; // position (1,1,2) disagrees with (1,2,1)
        let text = format!(
            r#"{{"order":3,"dim":3,"entries":{}}}"#,
            serde_json::to_string(&bad).unwrap()
        );
        let err = TensorDocument::from_str(&text).unwrap().to_tensor3().unwrap_err();
        assert!(err.to_string().contains("symmetry"), "{err}");
    }

    #[test]
    fn dim2_documents() {
        let text = r#"{"order":3,"dim":2,"entries":{"111":1,"112":"-1","122":1,"222":1}}"#;
        let t = TensorDocument::from_str(text).unwrap().to_tensor2().unwrap();
        assert_eq!(t.a112, int(-1));
        let back = TensorDocument::from_tensor2(&t);
        let t2 = TensorDocument::from_str(&back.to_json())
            .unwrap()
            .to_tensor2()
            .unwrap();
        assert_eq!(t.entries(), t2.entries());
    }

    #[test]
    fn invalid_documents_name_the_field() {
        let err = TensorDocument::from_str(r#"{"order":4,"dim":3,"entries":{}}"#).unwrap_err();
        assert!(err.to_string().contains("order"), "{err}");

        let err = TensorDocument::from_str(r#"{"order":3,"dim":5,"entries":{}}"#).unwrap_err();
        assert!(err.to_string().contains("dim"), "{err}");

        let err = TensorDocument::from_str(r#"{"order":3,"dim":3,"entries":{"112":0.5}}"#)
            .unwrap()
            .to_tensor3()
            .unwrap_err();
        assert!(err.to_string().contains("112"), "{err}");

        let err = TensorDocument::from_str(r#"{"order":3,"dim":3,"entries":{"114":1}}"#)
            .unwrap()
            .to_tensor3()
            .unwrap_err();
        assert!(err.to_string().contains("114"), "{err}");
    }
}
