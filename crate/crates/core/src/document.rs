//! Versioned JSON documents: `{"kind": ..., "formatVersion": 1, "payload": ...}`.
//!
//! Rationals are stored as `"num/den"` strings, labels as structured
//! objects, edges as label pairs. Loading reports syntax errors with line and
//! column, and schema errors with the failing field path.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::arrangement::{Description, LineArrangement};
use crate::transmission::{Instance, LabelledDigraph};
use crate::verify::RoundTripReport;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Arrangement,
    Description,
    Instance,
    Graph,
    Report,
}

impl DocumentKind {
    pub const ALL: [DocumentKind; 5] = [
        DocumentKind::Arrangement,
        DocumentKind::Description,
        DocumentKind::Instance,
        DocumentKind::Graph,
        DocumentKind::Report,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DocumentKind::Arrangement => "arrangement",
            DocumentKind::Description => "description",
            DocumentKind::Instance => "instance",
            DocumentKind::Graph => "graph",
            DocumentKind::Report => "report",
        }
    }
}

impl fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Arrangement(LineArrangement),
    Description(Description),
    Instance(Instance),
    Graph(LabelledDigraph),
    Report(Box<RoundTripReport>),
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Arrangement(_) => DocumentKind::Arrangement,
            Document::Description(_) => DocumentKind::Description,
            Document::Instance(_) => DocumentKind::Instance,
            Document::Graph(_) => DocumentKind::Graph,
            Document::Report(_) => DocumentKind::Report,
        }
    }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation at {path} (line {line}, column {column}): {message}")]
    Schema {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported formatVersion {0} (expected {FORMAT_VERSION})")]
    UnsupportedVersion(u64),
    #[error("expected a {expected} document, found {found}")]
    WrongKind {
        expected: DocumentKind,
        found: DocumentKind,
    },
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Envelope<'a, T: Serialize> {
    kind: DocumentKind,
    format_version: u64,
    payload: &'a T,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct Typed<T> {
    #[allow(dead_code)]
    kind: DocumentKind,
    #[allow(dead_code)]
    format_version: u64,
    payload: T,
}

fn envelope<T: Serialize>(kind: DocumentKind, payload: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope {
        kind,
        format_version: FORMAT_VERSION,
        payload,
    })
    .expect("documents serialize to JSON");
    s.push('\n');
    s
}

/// Pretty JSON text with a trailing newline. Deterministic.
pub fn to_json(doc: &Document) -> String {
    match doc {
        Document::Arrangement(x) => envelope(doc.kind(), x),
        Document::Description(x) => envelope(doc.kind(), x),
        Document::Instance(x) => envelope(doc.kind(), x),
        Document::Graph(x) => envelope(doc.kind(), x),
        Document::Report(x) => envelope(doc.kind(), x),
    }
}

fn schema(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Schema {
        path: path.to_string(),
        line: 0,
        column: 0,
        message: message.into(),
    }
}

fn typed_payload<T: DeserializeOwned>(text: &str) -> Result<T, DocumentError> {
    let mut de = serde_json::Deserializer::from_str(text);
    match serde_path_to_error::deserialize::<_, Typed<T>>(&mut de) {
        Ok(t) => Ok(t.payload),
        Err(e) => {
            let path = e.path().to_string();
            let inner = e.into_inner();
            Err(DocumentError::Schema {
                path,
                line: inner.line(),
                column: inner.column(),
                message: strip_position(&inner.to_string()),
            })
        }
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn from_json(text: &str) -> Result<Document, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema(".", "document must be a JSON object"))?;
    let kind: DocumentKind = match obj.get("kind") {
        None => return Err(schema("kind", "missing field")),
        Some(k) => serde_json::from_value(k.clone()).map_err(|_| {
            let names: Vec<&str> = DocumentKind::ALL.iter().map(DocumentKind::name).collect();
            schema("kind", format!("expected one of {}, found {k}", names.join(", ")))
        })?,
    };
    let version = obj
        .get("formatVersion")
        .ok_or_else(|| schema("formatVersion", "missing field"))?
        .as_u64()
        .ok_or_else(|| schema("formatVersion", "expected a non-negative integer"))?;
    if version != FORMAT_VERSION {
        return Err(DocumentError::UnsupportedVersion(version));
    }
    if !obj.contains_key("payload") {
        return Err(schema("payload", "missing field"));
    }
    Ok(match kind {
        DocumentKind::Arrangement => Document::Arrangement(typed_payload(text)?),
        DocumentKind::Description => Document::Description(typed_payload(text)?),
        DocumentKind::Instance => {
            let inst: Instance = typed_payload(text)?;
            inst.check().map_err(|e| schema("payload.entries", e.to_string()))?;
            for (i, e) in inst.entries.iter().enumerate() {
                e.object
                    .check()
                    .map_err(|err| schema(&format!("payload.entries[{i}].object"), format!("{}: {err}", e.label)))?;
            }
            Document::Instance(inst)
        }
        DocumentKind::Graph => Document::Graph(typed_payload(text)?),
        DocumentKind::Report => Document::Report(Box::new(typed_payload(text)?)),
    })
}

pub fn save_document(doc: &Document, path: impl AsRef<Path>) -> Result<(), DocumentError> {
    let path = path.as_ref();
    fs::write(path, to_json(doc)).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_document(path: impl AsRef<Path>) -> Result<Document, DocumentError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

macro_rules! expect_kind {
    ($name:ident, $variant:ident, $ty:ty) => {
        impl Document {
            pub fn $name(self) -> Result<$ty, DocumentError> {
                match self {
                    Document::$variant(x) => Ok(x),
                    other => Err(DocumentError::WrongKind {
                        expected: DocumentKind::$variant,
                        found: other.kind(),
                    }),
                }
            }
        }
    };
}

expect_kind!(into_arrangement, Arrangement, LineArrangement);
expect_kind!(into_description, Description, Description);
expect_kind!(into_instance, Instance, Instance);
expect_kind!(into_graph, Graph, LabelledDigraph);
expect_kind!(into_report, Report, Box<RoundTripReport>);
