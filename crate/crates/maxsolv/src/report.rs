//! Deterministic report rendering for the command-line surface.
//!
//! Reports render as a TSV body under a `#`-prefixed header block, or as a
//! single JSON document with `--json`. All content is derived from parsed,
//! canonicalized inputs, so byte-identical inputs (up to directive order)
//! produce byte-identical reports.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub index_digest: Option<String>,
    pub header: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub exit: i32,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            index_digest: None,
            header: vec![],
            columns: vec![],
            rows: vec![],
            exit: 0,
        }
    }

    pub fn render_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# maxsolv {}\n", self.command));
        if let Some(d) = &self.index_digest {
            out.push_str(&format!("# digest: {d}\n"));
        }
        for h in &self.header {
            out.push_str(&format!("# {h}\n"));
        }
        if !self.columns.is_empty() {
            out.push_str(&format!("# columns: {}\n", self.columns.join("\t")));
        }
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| serde_json::Value::Array(r.iter().map(|c| c.clone().into()).collect()))
            .collect();
        let doc = serde_json::json!({
            "command": self.command,
            "digest": self.index_digest,
            "header": self.header,
            "columns": self.columns,
            "rows": rows,
            "exit": self.exit,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}
