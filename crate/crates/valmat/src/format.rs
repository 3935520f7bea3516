//! JSON documents for instances, trees and polynomial matrices.
//!
//! Syntax and type errors carry serde_json's line and column. Semantic errors
//! about a base point at the start of that entry in the `bases` array.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use valmat_core::generators::{Poly, PolyMatrix, TreeInstance};
use valmat_core::{ElementSet, GroundSet, Valuation};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { line, column, message: message.into() }
    }

    fn from_json(e: serde_json::Error) -> Self {
        ParseError { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseEntry {
    pub base: Vec<String>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub version: u32,
    pub elements: Vec<String>,
    pub rank: usize,
    pub bases: Vec<BaseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Value>,
}

/// A parsed instance and its optional generator block.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub valuation: Valuation,
    pub generator: Option<Value>,
}

fn check_version(text: &str, version: u32) -> Result<(), ParseError> {
    if version == FORMAT_VERSION {
        Ok(())
    } else {
        let at = text.find("\"version\"").unwrap_or(0);
        Err(ParseError::at(text, at, format!("unsupported version {version}, expected {FORMAT_VERSION}")))
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(ParseError::from_json)?;
    check_version(text, doc.version)?;
    let whole = |m: String| ParseError::at(text, 0, m);
    let ground = GroundSet::new(doc.elements.iter().cloned()).map_err(|e| {
        ParseError::at(text, text.find("\"elements\"").unwrap_or(0), e.to_string())
    })?;
    let ground = Arc::new(ground);
    let mut pairs: Vec<(ElementSet, i64)> = Vec::with_capacity(doc.bases.len());
    for (i, entry) in doc.bases.iter().enumerate() {
        let here = |m: String| ParseError::at(text, array_item_offset(text, "bases", i).unwrap_or(0), m);
        let mut set = ElementSet::EMPTY;
        for label in &entry.base {
            let pos = ground
                .position(label)
                .ok()
                .ok_or_else(|| here(format!("bases[{i}]: unknown element `{label}`")))?;
            if set.contains(pos) {
                return Err(here(format!("bases[{i}]: element `{label}` repeated")));
            }
            set = set.with(pos);
        }
        let shown = ground.format_set(set);
        if set.len() != doc.rank {
            return Err(here(format!("bases[{i}]: base {shown} has {} elements, rank is {}", set.len(), doc.rank)));
        }
        if let Some(j) = pairs.iter().position(|p| p.0 == set) {
            return Err(here(format!("bases[{i}]: base {shown} already given as bases[{j}]")));
        }
        pairs.push((set, entry.value));
    }
    if pairs.is_empty() {
        return Err(whole("no bases".into()));
    }
    let valuation = Valuation::from_pairs(ground.clone(), doc.rank, pairs.clone()).map_err(|e| whole(e.to_string()))?;
    if let Err(e) = valuation.family().require_matroid() {
        let i = match &e {
            valmat_core::Error::NotAMatroid { base, .. } => {
                pairs.iter().position(|p| ground.format_set(p.0) == *base).unwrap_or(0)
            }
            _ => 0,
        };
        let offset = array_item_offset(text, "bases", i).unwrap_or(0);
        return Err(ParseError::at(text, offset, format!("bases[{i}]: {e}")));
    }
    Ok(Instance { valuation, generator: doc.generator })
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn label_list(labels: impl Iterator<Item = String>) -> String {
    let items: Vec<String> = labels.map(|l| quote(&l)).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical text: elements in ground order, bases in the crate's base
/// order with their labels in ground order, one base per line.
pub fn emit_instance(v: &Valuation, generator: Option<&Value>) -> String {
    let g = v.ground();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"version\": {FORMAT_VERSION},\n"));
    out.push_str(&format!("  \"elements\": {},\n", label_list(g.labels().iter().cloned())));
    out.push_str(&format!("  \"rank\": {},\n", v.rank()));
    out.push_str("  \"bases\": [\n");
    let n = v.len();
    for (i, (b, w)) in v.iter().enumerate() {
        let labels = label_list(b.iter().map(|e| g.label(e).to_string()));
        let comma = if i + 1 < n { "," } else { "" };
        out.push_str(&format!("    {{\"base\": {labels}, \"value\": {w}}}{comma}\n"));
    }
    match generator {
        Some(gen) => {
            out.push_str("  ],\n");
            out.push_str(&format!("  \"generator\": {}\n", serde_json::to_string(gen).expect("values serialize")));
        }
        None => out.push_str("  ]\n"),
    }
    out.push_str("}\n");
    out
}

/// Byte offset of item `index` of the top-level array under `key`.
fn array_item_offset(text: &str, key: &str, index: usize) -> Option<usize> {
    let bytes = text.as_bytes();
    let needle = format!("\"{key}\"");
    let mut depth = 0i32;
    let mut i = 0;
    let mut in_string = false;
    let mut array_start = None;
    while i < bytes.len() {
        let c = bytes[i];
        if in_string {
            match c {
                b'\\' => i += 1,
                b'"' => in_string = false,
                _ => {}
            }
        } else {
            match c {
                b'"' => {
                    if depth == 1 && text[i..].starts_with(&needle) {
                        let rest = &text[i + needle.len()..];
                        let colon = rest.find(':')?;
                        let open = rest[colon..].find('[')? + colon;
                        array_start = Some(i + needle.len() + open + 1);
                        break;
                    }
                    in_string = true;
                }
                b'{' | b'[' => depth += 1,
                b'}' | b']' => depth -= 1,
                _ => {}
            }
        }
        i += 1;
    }
    let mut i = array_start?;
    let mut depth = 0i32;
    let mut in_string = false;
    let mut seen = 0usize;
    let mut at_item_start = true;
    while i < bytes.len() {
        let c = bytes[i];
        if in_string {
            match c {
                b'\\' => i += 1,
                b'"' => in_string = false,
                _ => {}
            }
        } else if c.is_ascii_whitespace() {
        } else {
            if at_item_start && depth == 0 {
                if c == b']' {
                    return None;
                }
                if seen == index {
                    return Some(i);
                }
                at_item_start = false;
            }
            match c {
                b'"' => in_string = true,
                b'{' | b'[' => depth += 1,
                b'}' => depth -= 1,
                b']' => {
                    if depth == 0 {
                        return None;
                    }
                    depth -= 1;
                }
                b',' if depth == 0 => {
                    seen += 1;
                    at_item_start = true;
                }
                _ => {}
            }
        }
        i += 1;
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeDocument {
    pub version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub leaves: Vec<String>,
    pub root: String,
}

pub fn parse_tree(text: &str) -> Result<TreeInstance, ParseError> {
    let doc: TreeDocument = serde_json::from_str(text).map_err(ParseError::from_json)?;
    check_version(text, doc.version)?;
    let vertices: Vec<&str> = doc.vertices.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = doc.edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let leaves: Vec<&str> = doc.leaves.iter().map(String::as_str).collect();
    TreeInstance::from_labels(&vertices, &edges, &leaves, &doc.root).map_err(|e| ParseError::at(text, 0, e.to_string()))
}

pub fn emit_tree(tree: &TreeInstance) -> String {
    let label = |i: usize| tree.vertices()[i].clone();
    let doc = TreeDocument {
        version: FORMAT_VERSION,
        vertices: tree.vertices().to_vec(),
        edges: tree.edges().iter().map(|&(a, b)| (label(a), label(b))).collect(),
        leaves: tree.leaves().iter().map(|&l| label(l)).collect(),
        root: label(tree.root()),
    };
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

/// `rows[i][j]` is the entry in row `i`, column `j`, as coefficients from
/// degree 0 upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub version: u32,
    pub elements: Vec<String>,
    pub rows: Vec<Vec<Vec<i64>>>,
}

pub fn parse_matrix(text: &str) -> Result<PolyMatrix, ParseError> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(ParseError::from_json)?;
    check_version(text, doc.version)?;
    let rows = doc
        .rows
        .into_iter()
        .map(|r| r.into_iter().map(Poly::new).collect())
        .collect();
    PolyMatrix::new(doc.elements, rows).map_err(|e| ParseError::at(text, 0, e.to_string()))
}

pub fn emit_matrix(m: &PolyMatrix) -> String {
    let doc = MatrixDocument {
        version: FORMAT_VERSION,
        elements: m.labels().to_vec(),
        rows: m.rows().iter().map(|r| r.iter().map(|p| p.coeffs().to_vec()).collect()).collect(),
    };
    serde_json::to_string(&doc).expect("documents serialize") + "\n"
}
