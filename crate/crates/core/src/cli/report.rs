use std::io::Write;

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Kv,
    JsonLines,
}

/// An ordered list of key/value lines.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub lines: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            match format {
                Format::Kv => out.push_str(&format!("{k}: {v}\n")),
                Format::JsonLines => {
                    let rec = serde_json::json!({ "field": k, "value": v });
                    out.push_str(&rec.to_string());
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) {
        // a closed stdout is not worth a panic
        let _ = out.write_all(self.render(format).as_bytes());
    }
}
