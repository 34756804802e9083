use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one command. Everything except `elapsed_ms` is reproducible
/// from the inputs and the seed.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: i64,
    pub results: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<bool>,
    /// Machine-readable code when the result is only partially trustworthy.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    /// The report without timing.
    pub fn body(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("elapsed_ms");
        v
    }

    /// Looks up a dotted path such as `fixed.0.coefficient` in the results,
    /// falling back to the top-level fields.
    pub fn lookup(&self, path: &str) -> Option<Value> {
        let body = self.body();
        let mut parts = path.split('.');
        let first = parts.next()?;
        let mut cur = self.results.get(first).or_else(|| body.get(first))?.clone();
        for p in parts {
            cur = match &cur {
                Value::Array(items) => items.get(p.parse::<usize>().ok()?)?.clone(),
                Value::Object(map) => map.get(p)?.clone(),
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "seed: {}  trials: {}  coeff_bound: {}\n",
            self.seed, self.trials, self.coeff_bound
        ));
        for (k, v) in &self.results {
            out.push_str(&format!("{k}: {}\n", render(v)));
        }
        if let Some(s) = self.stable {
            out.push_str(&format!("stable: {s}\n"));
        }
        if let Some(f) = &self.flag {
            out.push_str(&format!("flag: {f}\n"));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }

    /// Process exit code for a completed command.
    pub fn exit_code(&self) -> i32 {
        match self.flag.as_deref() {
            Some("unresolved_moving_support") => 5,
            Some("expectation_mismatch") => 1,
            _ => 0,
        }
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
