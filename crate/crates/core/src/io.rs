//! Instance files.
//!
//! Text format, one record per line:
//!
//! ```text
//! ball d m            | sphere d n f
//! <m simplices>       | <f facets>
//! removed r           (optional)
//! <r facets>
//! ```
//!
//! Every simplex is a line of ascending integers. A ball file lists the simplices in
//! attachment order and its removed facets are boundary facets. A sphere file lists
//! all facets and `removed` picks some of them. Text files keep the labels as they are.
//!
//! The JSON format stores the same content with labels renamed to `0..n-1` and the
//! original labels kept in `metadata.labels`, plus provenance (family, `d`, `k`,
//! `m`, seed and the claimed bounds). Files starting with `{` are read as JSON.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, StackedBall, StackedSphere, Vertex};
use crate::constructions::FamilyInstance;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    /// Original label of canonical vertex `i`; empty when labels are already original.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_tau_lower: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Ball(StackedBall),
    /// Dimension and the full facet list.
    Sphere { dim: usize, facets: Vec<Simplex> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub body: Body,
    pub removed: Vec<Simplex>,
    /// Provenance; `labels` is always empty after reading.
    pub metadata: Metadata,
}

impl Instance {
    pub fn from_ball(ball: StackedBall) -> Self {
        Instance {
            body: Body::Ball(ball),
            removed: Vec::new(),
            metadata: Metadata::default(),
        }
    }

    pub fn from_family(inst: &FamilyInstance) -> Self {
        Instance {
            body: Body::Ball(inst.ball.clone()),
            removed: inst.removed_facets.clone(),
            metadata: Metadata {
                family: Some(inst.family.clone()),
                d: Some(inst.dim),
                k: Some(inst.copies),
                claimed_n: Some(inst.claimed_n),
                claimed_tau_lower: inst.claimed_tau_lower,
                ..Metadata::default()
            },
        }
    }

    pub fn dim(&self) -> usize {
        match &self.body {
            Body::Ball(b) => b.dim(),
            Body::Sphere { dim, .. } => *dim,
        }
    }

    pub fn ball(&self) -> Option<&StackedBall> {
        match &self.body {
            Body::Ball(b) => Some(b),
            Body::Sphere { .. } => None,
        }
    }

    /// The sphere with the removed facets taken out.
    pub fn sphere(&self) -> Result<StackedSphere> {
        let full = match &self.body {
            Body::Ball(b) => b.boundary(),
            Body::Sphere { dim, facets } => {
                let vertices: BTreeSet<Vertex> = facets.iter().flatten().copied().collect();
                StackedSphere::from_parts(
                    *dim,
                    vertices.into_iter().collect(),
                    facets.iter().cloned().collect(),
                    BTreeSet::new(),
                )
            }
        };
        full.remove_facets(&self.removed)
    }

    fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = match &self.body {
            Body::Ball(b) => b.vertices().into_iter().collect(),
            Body::Sphere { facets, .. } => facets.iter().flatten().copied().collect(),
        };
        set.into_iter().collect()
    }

    fn simplices(&self) -> &[Simplex] {
        match &self.body {
            Body::Ball(b) => b.simplices(),
            Body::Sphere { facets, .. } => facets,
        }
    }
}

pub fn to_text(inst: &Instance) -> String {
    let mut out = String::new();
    let simplices = inst.simplices();
    match &inst.body {
        Body::Ball(b) => writeln!(out, "ball {} {}", b.dim(), b.len()),
        Body::Sphere { dim, facets } => {
            writeln!(out, "sphere {} {} {}", dim, inst.vertices().len(), facets.len())
        }
    }
    .expect("writing to a string");
    let line = |s: &Simplex| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    for s in simplices {
        out.push_str(&line(s));
        out.push('\n');
    }
    if !inst.removed.is_empty() {
        out.push_str(&format!("removed {}\n", inst.removed.len()));
        for s in &inst.removed {
            out.push_str(&line(s));
            out.push('\n');
        }
    }
    out
}

pub fn from_text(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty file".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let nums = |from: usize| -> Result<Vec<usize>> {
        fields[from..]
            .iter()
            .map(|f| {
                f.parse().map_err(|_| Error::Parse {
                    line: hline,
                    message: format!("bad number {f:?}"),
                })
            })
            .collect()
    };

    let mut read_simplices = |count: usize| -> Result<Vec<Simplex>> {
        (0..count)
            .map(|_| {
                let (no, l) = lines.next().ok_or(Error::Parse {
                    line: 0,
                    message: format!("expected {count} simplex lines"),
                })?;
                parse_simplex(no, l)
            })
            .collect()
    };

    let body = match fields.first().copied() {
        Some("ball") if fields.len() == 3 => {
            let p = nums(1)?;
            let simplices = read_simplices(p[1])?;
            let ball = StackedBall::new(p[0], simplices).map_err(|e| Error::Parse {
                line: hline,
                message: e.to_string(),
            })?;
            Body::Ball(ball)
        }
        Some("sphere") if fields.len() == 4 => {
            let p = nums(1)?;
            let facets = read_simplices(p[2])?;
            let n = facets.iter().flatten().collect::<BTreeSet<_>>().len();
            if n != p[1] {
                return Err(Error::Parse {
                    line: hline,
                    message: format!("header says {} vertices, facets use {n}", p[1]),
                });
            }
            if let Some(bad) = facets.iter().find(|f| f.len() != p[0] + 1) {
                return Err(Error::Parse {
                    line: hline,
                    message: format!("facet {bad} does not have {} vertices", p[0] + 1),
                });
            }
            Body::Sphere { dim: p[0], facets }
        }
        _ => {
            return Err(Error::Parse {
                line: hline,
                message: format!("expected `ball d m` or `sphere d n f`, found {header:?}"),
            })
        }
    };

    let mut removed = Vec::new();
    if let Some((no, l)) = lines.next() {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let r: usize = match parts.as_slice() {
            ["removed", r] => r.parse().map_err(|_| Error::Parse {
                line: no,
                message: format!("bad count {r:?}"),
            })?,
            _ => {
                return Err(Error::Parse {
                    line: no,
                    message: format!("expected `removed r`, found {l:?}"),
                })
            }
        };
        for _ in 0..r {
            let (no, l) = lines.next().ok_or(Error::Parse {
                line: no,
                message: format!("expected {r} removed facets"),
            })?;
            removed.push(parse_simplex(no, l)?);
        }
    }
    if let Some((no, l)) = lines.next() {
        return Err(Error::Parse {
            line: no,
            message: format!("unexpected trailing line {l:?}"),
        });
    }

    let inst = Instance {
        body,
        removed,
        metadata: Metadata::default(),
    };
    check_removed(&inst)?;
    Ok(inst)
}

fn parse_simplex(line: usize, text: &str) -> Result<Simplex> {
    let vs = text
        .split_whitespace()
        .map(|t| {
            t.parse::<Vertex>().map_err(|_| Error::Parse {
                line,
                message: format!("bad vertex {t:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Simplex::new(vs).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })
}

fn check_removed(inst: &Instance) -> Result<()> {
    inst.sphere().map(|_| ()).map_err(|e| Error::Parse {
        line: 0,
        message: format!("removed facets: {e}"),
    })
}

#[derive(Serialize, Deserialize)]
struct JsonInstance {
    kind: String,
    dim: usize,
    simplices: Vec<Vec<Vertex>>,
    #[serde(default)]
    removed: Vec<Vec<Vertex>>,
    #[serde(default)]
    metadata: Metadata,
}

pub fn to_json(inst: &Instance) -> String {
    let labels = inst.vertices();
    let index: BTreeMap<Vertex, Vertex> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as Vertex))
        .collect();
    let canon = |s: &Simplex| -> Vec<Vertex> { s.iter().map(|v| index[v]).collect() };
    let json = JsonInstance {
        kind: match inst.body {
            Body::Ball(_) => "ball".into(),
            Body::Sphere { .. } => "sphere".into(),
        },
        dim: inst.dim(),
        simplices: inst.simplices().iter().map(canon).collect(),
        removed: inst.removed.iter().map(canon).collect(),
        metadata: Metadata {
            labels,
            ..inst.metadata.clone()
        },
    };
    serde_json::to_string(&json).expect("instance serializes")
}

pub fn from_json(text: &str) -> Result<Instance> {
    let json: JsonInstance = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let labels = json.metadata.labels.clone();
    let relabel = |s: &[Vertex]| -> Result<Simplex> {
        let vs = s
            .iter()
            .map(|&v| {
                if labels.is_empty() {
                    Ok(v)
                } else {
                    labels.get(v as usize).copied().ok_or(Error::Parse {
                        line: 0,
                        message: format!("vertex {v} has no label"),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(vs).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })
    };
    let simplices = json
        .simplices
        .iter()
        .map(|s| relabel(s))
        .collect::<Result<Vec<_>>>()?;
    let removed = json
        .removed
        .iter()
        .map(|s| relabel(s))
        .collect::<Result<Vec<_>>>()?;
    let body = match json.kind.as_str() {
        "ball" => Body::Ball(StackedBall::new(json.dim, simplices).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })?),
        "sphere" => Body::Sphere {
            dim: json.dim,
            facets: simplices,
        },
        other => {
            return Err(Error::Parse {
                line: 0,
                message: format!("unknown kind {other:?}"),
            })
        }
    };
    let inst = Instance {
        body,
        removed,
        metadata: Metadata {
            labels: Vec::new(),
            ..json.metadata
        },
    };
    check_removed(&inst)?;
    Ok(inst)
}

/// Reads either format.
pub fn parse(text: &str) -> Result<Instance> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

pub fn read(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse(&text)
}

/// Writes JSON when the extension is `.json`, text otherwise.
pub fn write(path: &Path, inst: &Instance) -> std::io::Result<()> {
    let body = if path.extension().is_some_and(|e| e == "json") {
        to_json(inst)
    } else {
        to_text(inst)
    };
    std::fs::write(path, body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{general_lower_bound_2, linear_lower_bound, path_ball};

    #[test]
    fn text_layout() {
        let inst = Instance::from_ball(path_ball(2, 2).unwrap());
        assert_eq!(to_text(&inst), "ball 2 2\n1 2 3 4\n2 3 4 5\n");
        assert_eq!(from_text(&to_text(&inst)).unwrap(), inst);
    }

    #[test]
    fn family_round_trips() {
        let fam = linear_lower_bound(2, 1).unwrap();
        let inst = Instance::from_family(&fam);
        let text = from_text(&to_text(&inst)).unwrap();
        assert_eq!(text.body, inst.body);
        assert_eq!(text.removed, inst.removed);
        assert_eq!(text.sphere().unwrap(), fam.sphere);

        let json = parse(&to_json(&inst)).unwrap();
        assert_eq!(json, inst);
    }

    #[test]
    fn json_uses_canonical_labels() {
        let fam = general_lower_bound_2(2).unwrap();
        let inst = Instance::from_family(&fam);
        let raw: serde_json::Value = serde_json::from_str(&to_json(&inst)).unwrap();
        let max = raw["simplices"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|s| s.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()))
            .max()
            .unwrap();
        assert_eq!(max, 25);
        assert_eq!(raw["metadata"]["labels"].as_array().unwrap().len(), 26);
        assert_eq!(parse(&to_json(&inst)).unwrap(), inst);
    }

    #[test]
    fn sphere_files() {
        let text = "sphere 2 4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\nremoved 1\n1 2 3\n";
        let inst = parse(text).unwrap();
        assert_eq!(inst.sphere().unwrap().facet_count(), 3);
        assert_eq!(to_text(&inst), text);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("ball 2 1\n1 2 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("ball 2 2\n1 2 3 4\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("sphere 2 5 1\n1 2 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("ball 2 1\n1 2 3 4\nremoved 1\n1 2 5\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse("ball 2 1\n1 2 3 4\nextra\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("{\"kind\": 3}"), Err(Error::Parse { .. })));
    }
}
