//! `harmid list`.

use std::fmt::Write as _;

use harmid_core::registry::{IdentityRecord, RecordExport};

use crate::config::Format;

pub fn render(records: &[&IdentityRecord], format: Format) -> String {
    let export: Vec<RecordExport> = records.iter().map(|r| RecordExport::from(*r)).collect();
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string_pretty(&export).expect("serializes");
            out.push('\n');
        }
        Format::Md => {
            out.push_str("| id | class | parameters | lhs | rhs | anchor |\n|---|---|---|---|---|---|\n");
            for r in &export {
                let params: Vec<String> = r.params.iter().map(|p| format!("{} in {}", p.name, p.domain)).collect();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | `{}` | `{}` | {} |",
                    r.id,
                    r.class.short(),
                    params.join("; ").replace('|', "\\|"),
                    r.lhs,
                    r.rhs,
                    r.anchor.replace('|', "\\|")
                );
            }
        }
        Format::Text => {
            for r in &export {
                let params: Vec<String> = r.params.iter().map(|p| format!("{} in {}", p.name, p.domain)).collect();
                let params = if params.is_empty() { "-".to_string() } else { params.join("; ") };
                let _ = writeln!(out, "{:14} {:12} {}  [{}]", r.id, r.class.short(), r.anchor, params);
                let _ = writeln!(out, "    {} = {}", r.lhs, r.rhs);
            }
        }
    }
    out
}
