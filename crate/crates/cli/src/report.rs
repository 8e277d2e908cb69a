use std::time::Duration;

use serde::Serialize;

/// Outcome of one command. Field order is the serialization order, so
/// `--json` output is byte-stable for fixed inputs when timing is off.
#[derive(Debug, Default, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub algorithm: &'static str,
    pub inputs: Vec<Input>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_embedding: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<BenchRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Input {
    pub name: &'static str,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub instances: usize,
    pub matches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &'static str, algorithm: &'static str) -> Self {
        Self {
            command,
            algorithm,
            ..Self::default()
        }
    }

    pub fn input(mut self, name: &'static str, value: impl ToString) -> Self {
        self.inputs.push(Input {
            name,
            value: value.to_string(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Plain-text rendering, one `key: value` line per present field.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nalgorithm: {}\n", self.command, self.algorithm);
        for i in &self.inputs {
            out += &format!("{}: {}\n", i.name, i.value);
        }
        if let Some(d) = self.decision {
            out += &format!("match: {}\n", if d { "yes" } else { "no" });
        }
        if let Some(l) = self.length {
            out += &format!("length: {l}\n");
        }
        if let Some(p) = &self.pattern {
            out += &format!("pattern: {p}\n");
        }
        if let Some(w) = &self.word {
            out += &format!("word: {w}\n");
        }
        if let Some(e) = &self.embedding {
            out += &format!("embedding: {}\n", tuple(e));
        }
        if let Some(e) = &self.second_embedding {
            out += &format!("second embedding: {}\n", tuple(e));
        }
        if let Some(v) = &self.values {
            out += &format!("values: {}\n", join(v));
        }
        if let Some(c) = self.count {
            out += &format!("count: {c}\n");
        }
        for m in &self.members {
            out += m;
            out += "\n";
        }
        if !self.rows.is_empty() {
            out += "n\tinstances\tmatches\tsteps\tms\n";
            for r in &self.rows {
                let steps = r.steps.map_or("-".to_string(), |s| s.to_string());
                let ms = r.elapsed_ms.map_or("-".to_string(), |t| format!("{t:.3}"));
                out += &format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    r.n, r.instances, r.matches, steps, ms
                );
            }
        }
        if let Some(s) = self.steps {
            out += &format!("steps: {s}\n");
        }
        if let Some(t) = self.elapsed_ms {
            out += &format!("elapsed: {t:.3} ms\n");
        }
        out
    }
}

pub fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn tuple(v: &[usize]) -> String {
    format!(
        "({})",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn join(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
