use std::collections::BTreeSet;
use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

const KINDS: [(&str, &str); 3] = [
    ("asserted", "Asserted"),
    ("erratum", "Erratum"),
    ("exploratory", "Exploratory"),
];

fn main() {
    let manifest = "claims.manifest";
    println!("cargo:rerun-if-changed={manifest}");
    let text = fs::read_to_string(manifest).expect("claims.manifest is readable");

    let mut rows = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.splitn(3, '|').map(str::trim).collect();
        let [id, kind, statement] = fields[..] else {
            panic!(
                "{manifest}:{}: expected `id | kind | statement`",
                lineno + 1
            );
        };
        assert!(
            !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'),
            "{manifest}:{}: bad id {id:?}",
            lineno + 1
        );
        assert!(
            seen.insert(id.to_string()),
            "{manifest}:{}: duplicate id {id}",
            lineno + 1
        );
        let variant = KINDS
            .iter()
            .find(|(name, _)| *name == kind)
            .unwrap_or_else(|| panic!("{manifest}:{}: unknown kind {kind:?}", lineno + 1))
            .1;
        rows.push((id.to_string(), variant, statement.to_string()));
    }

    let mut out = String::new();
    out.push_str("#[allow(non_camel_case_types)]\n");
    out.push_str("#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]\n");
    out.push_str("pub enum PropertyId {\n");
    for (id, _, _) in &rows {
        writeln!(out, "    {id},").unwrap();
    }
    out.push_str("}\n\nimpl PropertyId {\n");
    out.push_str("    pub const ALL: &'static [PropertyId] = &[\n");
    for (id, _, _) in &rows {
        writeln!(out, "        PropertyId::{id},").unwrap();
    }
    out.push_str("    ];\n\n    pub fn as_str(&self) -> &'static str {\n        match self {\n");
    for (id, _, _) in &rows {
        writeln!(out, "            PropertyId::{id} => {id:?},").unwrap();
    }
    out.push_str(
        "        }\n    }\n\n    pub fn kind(&self) -> ClaimKind {\n        match self {\n",
    );
    for (id, kind, _) in &rows {
        writeln!(out, "            PropertyId::{id} => ClaimKind::{kind},").unwrap();
    }
    out.push_str(
        "        }\n    }\n\n    pub fn statement(&self) -> &'static str {\n        match self {\n",
    );
    for (id, _, statement) in &rows {
        writeln!(out, "            PropertyId::{id} => {statement:?},").unwrap();
    }
    out.push_str("        }\n    }\n}\n");

    let dest = Path::new(&env::var("OUT_DIR").unwrap()).join("property_ids.rs");
    fs::write(dest, out).unwrap();
}
