//! Poset file formats.
//!
//! Two input formats are accepted and told apart by the first
//! non-whitespace byte:
//!
//! * JSON: `{"elements": [...], "covers": [[x, y], ...], "relations": [[x, y], ...]}`
//!   with `covers` and `relations` optional. Both lists mean `x < y`;
//!   redundant pairs are reduced away.
//! * Text: one or more comma-separated relations `x < y` per line. Elements
//!   appear in order of first mention. Blank lines and lines starting with
//!   `#` are skipped.
//!
//! Output is always JSON with `elements` and `covers`, which round-trips
//! through the parser.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<(String, String)>>,
}

pub fn parse_poset_bytes(bytes: &[u8]) -> Result<Poset> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        location: format!("byte {}", e.valid_up_to()),
        message: "input is not valid UTF-8".into(),
    })?;
    parse_poset_str(text)
}

pub fn parse_poset_str(text: &str) -> Result<Poset> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<Poset> {
    let doc: PosetDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let lists = [("covers", &doc.covers), ("relations", &doc.relations)];
    let mut pairs = Vec::new();
    for (field, list) in lists {
        for (k, (a, b)) in list.iter().flatten().enumerate() {
            for name in [a, b] {
                if !doc.elements.contains(name) {
                    return Err(Error::UnknownElement(name.clone()).at(format!("{field}[{k}]")));
                }
            }
            pairs.push((a.as_str(), b.as_str()));
        }
    }
    Poset::build(doc.elements.iter().cloned(), pairs).map_err(|e| e.at("elements"))
}

fn parse_text(text: &str) -> Result<Poset> {
    let mut elements: Vec<String> = Vec::new();
    let mut relations: Vec<(String, String, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        for item in trimmed.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let parts: Vec<&str> = item.split('<').map(str::trim).collect();
            let [a, b] = parts[..] else {
                return Err(Error::Parse {
                    location: format!("line {lineno}"),
                    message: format!("expected `x < y`, found `{item}`"),
                });
            };
            for name in [a, b] {
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(Error::Parse {
                        location: format!("line {lineno}"),
                        message: format!("bad element name `{name}` in `{item}`"),
                    });
                }
                if !elements.iter().any(|e| e == name) {
                    elements.push(name.to_string());
                }
            }
            relations.push((a.to_string(), b.to_string(), lineno));
        }
    }
    let built = Poset::build(
        elements.iter().cloned(),
        relations.iter().map(|(a, b, _)| (a, b)),
    );
    built.map_err(|e| {
        // report the first line whose relations close the cycle
        let line = (1..=relations.len())
            .find(|&k| {
                Poset::build(
                    elements.iter().cloned(),
                    relations[..k].iter().map(|(a, b, _)| (a, b)),
                )
                .is_err()
            })
            .map_or(0, |k| relations[k - 1].2);
        e.at(format!("line {line}"))
    })
}

pub fn to_document(poset: &Poset) -> PosetDocument {
    PosetDocument {
        elements: poset.names().to_vec(),
        covers: Some(
            poset
                .cover_pairs()
                .into_iter()
                .map(|(x, y)| (poset.name(x).to_string(), poset.name(y).to_string()))
                .collect(),
        ),
        relations: None,
    }
}

pub fn to_json(poset: &Poset) -> String {
    serde_json::to_string(&to_document(poset)).expect("string data always serializes")
}

pub fn to_json_pretty(poset: &Poset) -> String {
    serde_json::to_string_pretty(&to_document(poset)).expect("string data always serializes")
}

/// Graphviz rendering of the Hasse diagram, bottom to top.
pub fn to_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for name in poset.names() {
        let _ = writeln!(out, "  {};", serde_json::Value::from(name.as_str()));
    }
    for (x, y) in poset.cover_pairs() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            serde_json::Value::from(poset.name(x)),
            serde_json::Value::from(poset.name(y))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let p = parse_poset_bytes(b"1 < 3\n2 < 3\n2 < 4\n").unwrap();
        assert_eq!(p.names(), ["1", "3", "2", "4"]);
        assert_eq!(p.cover_pairs().len(), 3);
        let p = parse_poset_str("# comment\n\nq1<q2, q2<q3\n  q1 < q3\n").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.cover_pairs().len(), 2);
        let p = parse_poset_str("α < β\n").unwrap();
        assert_eq!(p.names(), ["α", "β"]);
    }

    #[test]
    fn text_errors() {
        let e = parse_poset_str("a < a\n").unwrap_err();
        assert!(
            matches!(&e, Error::Located { source, location } if matches!(**source, Error::Cycle(_)) && location == "line 1")
        );
        let e = parse_poset_str("a < b\n\nb < c\nc < a\n").unwrap_err();
        assert!(matches!(&e, Error::Located { location, .. } if location == "line 4"));
        let e = parse_poset_str("a < b\na b\n").unwrap_err();
        assert!(matches!(&e, Error::Parse { location, .. } if location == "line 2"));
        assert!(parse_poset_str("a < b < c").is_err());
        assert!(matches!(
            parse_poset_bytes(&[0xff, 0x00]),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn json_format() {
        let p = parse_poset_str(r#"{"elements":["a"],"covers":[]}"#).unwrap();
        assert_eq!(p.len(), 1);
        let p = parse_poset_str(
            r#" {"elements":["a","b","c"],"relations":[["a","b"],["b","c"],["a","c"]]}"#,
        )
        .unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
        let e = parse_poset_str(r#"{"elements":["a"],"covers":[["a","z"]]}"#).unwrap_err();
        assert!(matches!(&e, Error::Located { location, .. } if location == "covers[0]"));
        assert!(matches!(
            parse_poset_str(r#"{"elements":["a","a"]}"#),
            Err(Error::Located { .. })
        ));
        assert!(matches!(
            parse_poset_str("{\"elements\": [1]}"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poset_str(r#"{"elements":[],"extra":1}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn round_trip() {
        let p = Poset::build(["x", "y", "z", "w"], [("x", "y"), ("x", "z")]).unwrap();
        assert_eq!(parse_poset_str(&to_json(&p)).unwrap(), p);
        assert_eq!(parse_poset_str(&to_json_pretty(&p)).unwrap(), p);
        assert!(to_dot(&p).contains("\"x\" -> \"y\";"));
    }
}
