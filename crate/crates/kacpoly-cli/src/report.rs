//! Run reports and their three renderings.
//!
//! Every subcommand builds one [`Report`]: an echo of its inputs, scalar
//! outputs, tabular sections (polynomials appear as exponent/coefficient
//! rows), and the outcome of each verification it performed.  The table
//! rendering is for people and carries the wall time; the `json` rendering
//! emits one record per line and the `csv` rendering one comma-separated
//! record per line, both byte-identical across runs for fixed inputs.

use std::time::Duration;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub struct Report {
    command: &'static str,
    fields: Vec<(String, String)>,
    sections: Vec<Section>,
    checks: Vec<Check>,
}

pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            fields: Vec::new(),
            sections: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.fields.push((key.into(), value.into()));
    }

    pub fn section(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Renders the report; `wall` is printed in the table format only, so
    /// the machine formats stay deterministic.
    pub fn render(&self, format: Format, wall: Option<Duration>) -> String {
        match format {
            Format::Table => self.render_table(wall),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_table(&self, wall: Option<Duration>) -> String {
        let mut out = String::new();
        out.push_str(self.command);
        out.push('\n');

        let key_width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            out.push_str(&format!("  {k:<key_width$}  {v}\n"));
        }

        for s in &self.sections {
            out.push('\n');
            out.push_str(&format!("  {}\n", s.title));
            let mut widths: Vec<usize> = s.columns.iter().map(String::len).collect();
            for row in &s.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: &[String]| {
                let mut l = String::from("   ");
                for (w, cell) in widths.iter().zip(cells) {
                    l.push_str(&format!(" {cell:<w$}"));
                }
                l.trim_end().to_string()
            };
            out.push_str(&line(&s.columns));
            out.push('\n');
            if s.rows.is_empty() {
                out.push_str("    (empty)\n");
            }
            for row in &s.rows {
                out.push_str(&line(row));
                out.push('\n');
            }
        }

        if !self.checks.is_empty() {
            out.push_str("\n  checks\n");
            for c in &self.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                if c.detail.is_empty() {
                    out.push_str(&format!("    [{status}] {}\n", c.name));
                } else {
                    out.push_str(&format!("    [{status}] {}  ({})\n", c.name, c.detail));
                }
            }
        }

        if let Some(wall) = wall {
            out.push_str(&format!("\n  wall time  {:.1} ms\n", wall.as_secs_f64() * 1e3));
        }
        out
    }

    fn render_json(&self) -> String {
        use serde_json::json;
        let mut lines = Vec::new();
        lines.push(json!({ "command": self.command }));
        for (k, v) in &self.fields {
            lines.push(json!({ "field": k, "value": v }));
        }
        for s in &self.sections {
            lines.push(json!({ "section": s.title, "columns": s.columns }));
            for row in &s.rows {
                lines.push(json!({ "section": s.title, "row": row }));
            }
        }
        for c in &self.checks {
            lines.push(json!({ "check": c.name, "passed": c.passed, "detail": c.detail }));
        }
        let mut out = String::new();
        for l in lines {
            out.push_str(&l.to_string());
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        let mut record = |cells: &[&str]| {
            let encoded: Vec<String> = cells.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&encoded.join(","));
            out.push('\n');
        };
        record(&["command", self.command]);
        for (k, v) in &self.fields {
            record(&["field", k, v]);
        }
        for s in &self.sections {
            let mut header = vec!["section", s.title.as_str()];
            header.extend(s.columns.iter().map(String::as_str));
            record(&header);
            for row in &s.rows {
                let mut cells = vec!["row", s.title.as_str()];
                cells.extend(row.iter().map(String::as_str));
                record(&cells);
            }
        }
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "fail" };
            record(&["check", &c.name, status, &c.detail]);
        }
        out
    }
}

/// Quotes a CSV cell only when it contains a delimiter, quote, or newline.
fn csv_cell(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        r.field("alpha", "2");
        r.section(Section {
            title: "terms".into(),
            columns: vec!["exponent".into(), "coefficient".into()],
            rows: vec![vec!["5".into(), "1".into()], vec!["3".into(), "1".into()]],
        });
        r.check("oracle agreement", true, "");
        r
    }

    #[test]
    fn json_is_one_record_per_line() {
        let text = sample().render(Format::Json, None);
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v.is_object());
        }
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        assert_eq!(csv_cell("plain"), "plain");
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn table_shows_empty_sections_and_wall_time() {
        let mut r = Report::new("demo");
        r.section(Section {
            title: "rows".into(),
            columns: vec!["k".into(), "count".into()],
            rows: vec![],
        });
        let text = r.render(Format::Table, Some(Duration::from_millis(2)));
        assert!(text.contains("(empty)"));
        assert!(text.contains("wall time"));
    }

    #[test]
    fn failed_check_flips_the_summary() {
        let mut r = sample();
        assert!(r.all_checks_pass());
        r.check("fit agreement", false, "top coefficient differs");
        assert!(!r.all_checks_pass());
        let text = r.render(Format::Table, None);
        assert!(text.contains("[FAIL] fit agreement"));
    }
}
