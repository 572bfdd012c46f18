//! Structured verification reports.
//!
//! A [`Report`] accumulates named pass/fail checks, the canonicalized
//! inputs, and witnesses (counterexample terms on failure, certificates on
//! success). It renders either as indented text with wall-clock timing or
//! as a canonical JSON document: keys sorted, all exact values as strings,
//! and the timing field fixed to `null` so identical inputs produce
//! identical bytes.

use std::time::Instant;

use serde_json::{Map, Value};

use crate::supermatrix::SuperMatrix;

#[derive(Clone, Debug)]
pub struct Report {
    command: String,
    inputs: Vec<(String, String)>,
    checks: Vec<(String, bool)>,
    witnesses: Vec<(String, Value)>,
    started: Instant,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.push((key.to_string(), value.to_string()));
    }

    /// Records a named check and passes the flag through.
    pub fn check(&mut self, name: &str, ok: bool) -> bool {
        self.checks.push((name.to_string(), ok));
        ok
    }

    pub fn witness(&mut self, key: &str, value: Value) {
        self.witnesses.push((key.to_string(), value));
    }

    pub fn witness_str(&mut self, key: &str, value: impl ToString) {
        self.witness(key, Value::String(value.to_string()));
    }

    pub fn witness_matrix(&mut self, key: &str, m: &SuperMatrix) {
        let rows: Vec<Value> = m
            .render_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(Value::String).collect()))
            .collect();
        self.witness(key, Value::Array(rows));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    /// Canonical JSON document. `timing_ms` is always `null` so that the
    /// serialization is byte-stable across runs.
    pub fn json(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        let mut inputs = Map::new();
        for (k, v) in &self.inputs {
            inputs.insert(k.clone(), Value::String(v.clone()));
        }
        root.insert("inputs".into(), Value::Object(inputs));
        let mut checks = Map::new();
        for (k, ok) in &self.checks {
            checks.insert(k.clone(), Value::Bool(*ok));
        }
        root.insert("checks".into(), Value::Object(checks));
        let mut witnesses = Map::new();
        for (k, v) in &self.witnesses {
            witnesses.insert(k.clone(), v.clone());
        }
        root.insert("witnesses".into(), Value::Object(witnesses));
        root.insert(
            "verdict".into(),
            Value::String(if self.passed() { "pass" } else { "fail" }.into()),
        );
        root.insert("timing_ms".into(), Value::Null);
        Value::Object(root)
    }

    pub fn render_json(&self) -> String {
        // serde_json maps are ordered, so this string is canonical.
        let mut s = serde_json::to_string_pretty(&self.json()).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn render_human(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for (name, ok) in &self.checks {
            out.push_str(&format!(
                "[{}] {name}\n",
                if *ok { "ok" } else { "FAIL" }
            ));
        }
        for (k, v) in &self.witnesses {
            match v {
                Value::String(s) => out.push_str(&format!("  {k} = {s}\n")),
                other => out.push_str(&format!("  {k} = {other}\n")),
            }
        }
        let ms = self.started.elapsed().as_millis();
        out.push_str(&format!(
            "verdict: {} ({ms} ms)\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_sorted_and_timing_free() {
        let mut r = Report::new("demo");
        r.input("n", 2);
        r.check("zz-last", true);
        r.check("aa-first", true);
        r.witness_str("term", "z0 + 1");
        let text = serde_json::to_string(&r.json()).unwrap();
        // Top-level keys appear in sorted order.
        let order: Vec<usize> = ["\"checks\"", "\"command\"", "\"inputs\"", "\"timing_ms\"", "\"verdict\"", "\"witnesses\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(order, sorted);
        assert!(text.contains("\"timing_ms\":null"));
        assert!(text.contains("\"verdict\":\"pass\""));
    }

    #[test]
    fn failed_checks_flip_the_verdict() {
        let mut r = Report::new("demo");
        r.check("good", true);
        assert!(r.passed());
        r.check("bad", false);
        assert!(!r.passed());
        assert!(r.render_human().contains("[FAIL] bad"));
        assert!(r.render_human().contains("verdict: fail"));
    }
}
