use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sympair::rational::format_rational;
use sympair::symcore::{Partition, SymFn};
use sympair::Rational;

/// A computed result in every output format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Rendered {
    pub result: Value,
    pub text: String,
    pub csv: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn rational(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn terms(f: &SymFn) -> Value {
    Value::Array(
        f.iter()
            .map(|(p, c)| json!({ "partition": partition(p), "coeff": rational(c) }))
            .collect(),
    )
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

pub fn terms_csv(f: &SymFn) -> String {
    csv_table(
        &["partition", "num", "den"],
        f.iter()
            .map(|(p, c)| vec![p.to_string(), c.numer().to_string(), c.denom().to_string()]),
    )
}

/// `key,value` rows for the scalar fields of a JSON object.
pub fn fields_csv(result: &Value) -> String {
    let mut rows = BTreeMap::new();
    if let Value::Object(map) = result {
        for (k, v) in map {
            let cell = match v {
                Value::String(s) => s.clone(),
                Value::Object(o) if o.contains_key("num") => {
                    format!(
                        "{}/{}",
                        o["num"].as_str().unwrap_or(""),
                        o["den"].as_str().unwrap_or("")
                    )
                }
                other => other.to_string(),
            };
            rows.insert(k.clone(), cell);
        }
    }
    csv_table(
        &["field", "value"],
        rows.into_iter().map(|(k, v)| vec![k, v]),
    )
}

pub fn rational_text(q: &Rational) -> String {
    format_rational(q)
}

pub fn envelope(command: &str, params: &Value, result: &Value, ms: u128) -> Value {
    json!({
        "command": command,
        "params": params,
        "result": result,
        "version": sympair::VERSION,
        "ms": ms as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sympair::rational::ratio;

    #[test]
    fn rationals_are_strings() {
        assert_eq!(rational(&ratio(-3, 4)), json!({"num": "-3", "den": "4"}));
    }

    #[test]
    fn csv_quotes_partitions() {
        let f = SymFn::m(&[2, 1]);
        assert_eq!(terms_csv(&f), "partition,num,den\n\"[2,1]\",1,1\n");
    }
}
