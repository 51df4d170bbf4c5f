use std::io::Write;

use bpsplit_core::{BicliquePartition, SplitPartition};
use serde_json::{json, Value};

use crate::Format;

/// A command result rendered either as text or as a single JSON line.
pub struct Reply {
    command: &'static str,
    text: String,
    fields: Value,
}

impl Reply {
    pub fn new(command: &'static str, text: impl Into<String>, fields: Value) -> Self {
        Reply {
            command,
            text: text.into(),
            fields,
        }
    }

    pub fn split_partition(command: &'static str, p: &SplitPartition) -> Self {
        let join = |vs: &[usize]| {
            vs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut text = format!(
            "split: yes\nclass: {}\nomega: {}\nalpha: {}\nK: {}\nS: {}\n",
            p.class(),
            p.omega(),
            p.alpha(),
            join(p.clique_side()),
            join(p.independent_side()),
        );
        if let Some(s) = p.s_witness() {
            text.push_str(&format!("s-witness: {s}\n"));
        }
        if let Some(k) = p.k_witness() {
            text.push_str(&format!("k-witness: {k}\n"));
        }
        let fields = json!({
            "split": true,
            "class": p.class(),
            "omega": p.omega(),
            "alpha": p.alpha(),
            "clique": p.clique_side(),
            "independent": p.independent_side(),
            "s_witness": p.s_witness(),
            "k_witness": p.k_witness(),
        });
        Reply::new(command, text, fields)
    }
}

pub fn partition_json(p: &BicliquePartition) -> Value {
    Value::Array(p.iter().map(|b| json!([b.part_a(), b.part_b()])).collect())
}

pub struct Out {
    format: Format,
    stats: Vec<String>,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out {
            format,
            stats: Vec::new(),
        }
    }

    pub fn emit(&mut self, reply: Reply) {
        match self.format {
            Format::Text => self.raw(reply.text),
            Format::Machine => {
                let mut obj = serde_json::Map::new();
                obj.insert("command".into(), Value::from(reply.command));
                if let Value::Object(fields) = reply.fields {
                    obj.extend(fields);
                }
                self.raw(format!("{}\n", Value::Object(obj)));
            }
        }
    }

    pub fn raw(&mut self, s: String) {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        // a closed pipe is not worth a panic
        let _ = lock.write_all(s.as_bytes());
        let _ = lock.flush();
    }

    /// Queue a line for stderr; printed only under `--stats`.
    pub fn stat(&mut self, line: String) {
        self.stats.push(line);
    }

    pub fn take_stats(&mut self) -> Vec<String> {
        std::mem::take(&mut self.stats)
    }
}
