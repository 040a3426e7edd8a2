use serde_json::{Map, Value};

/// Ordered `key = value` output.
#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, prefix: &str, pairs: Vec<(String, String)>) {
        for (k, v) in pairs {
            self.push(format!("{prefix}{k}"), v);
        }
    }

    pub fn render(&self, json: bool) -> String {
        if !json {
            return self.entries.iter().map(|(k, v)| format!("{k} = {v}\n")).collect();
        }
        let object: Map<String, Value> = self
            .entries
            .iter()
            .map(|(k, v)| (k.clone(), typed(v)))
            .collect();
        format!("{}\n", Value::Object(object))
    }
}

/// Integers and booleans keep their JSON types; everything else is a string.
fn typed(v: &str) -> Value {
    if let Ok(i) = v.parse::<i64>() {
        return Value::from(i);
    }
    match v {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => Value::String(v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Report::default();
        r.push("lambda_comb", -1);
        r.push("enforced", true);
        r.push("note", "a b");
        assert_eq!(r.render(false), "lambda_comb = -1\nenforced = true\nnote = a b\n");
        assert_eq!(r.render(true), "{\"lambda_comb\":-1,\"enforced\":true,\"note\":\"a b\"}\n");
    }
}
