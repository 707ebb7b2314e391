//! JSON file formats and the textual group specifications used by the CLI.
//!
//! * group: `{"order": n, "table": [[...], ...], "names": ["e", ...]}`,
//!   names optional;
//! * digraph: `{"size": n, "nbhd": [[...], ...]}`;
//! * map: `{"values": [...]}` with an optional `"codomain_size"`.
//!
//! A group specification is either `file:<path>` or a `+`-separated direct
//! sum of `cyclic:n` (also `c:n`, `z:n`), `s:n` (also `sym:n`), `z2^n`
//! (also `b:n`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupKind};
use crate::limits::Limits;
use crate::space::{FiniteMap, ReflexiveDigraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupFile {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupFile {
            order: group.order(),
            table: group.rows(),
            names: group.names().map(<[String]>::to_vec),
        }
    }

    pub fn into_group(self, limits: &Limits) -> Result<FiniteGroup> {
        if self.order != self.table.len() {
            return Err(Error::MalformedTable(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_table_with_limits(&self.table, self.names, limits)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphFile {
    pub size: usize,
    pub nbhd: Vec<Vec<usize>>,
}

impl DigraphFile {
    pub fn from_digraph(x: &ReflexiveDigraph) -> Self {
        DigraphFile {
            size: x.size(),
            nbhd: x.neighborhoods().to_vec(),
        }
    }

    pub fn into_digraph(self) -> Result<ReflexiveDigraph> {
        if self.size != self.nbhd.len() {
            return Err(Error::DimMismatch {
                expected: self.size,
                got: self.nbhd.len(),
            });
        }
        ReflexiveDigraph::new(self.nbhd)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub values: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain_size: Option<usize>,
}

impl MapFile {
    pub fn from_map(f: &FiniteMap) -> Self {
        MapFile {
            values: f.values().to_vec(),
            codomain_size: Some(f.cod_size()),
        }
    }

    /// The map into a codomain of size `cod_size`; a declared
    /// `codomain_size` must agree with it.
    pub fn into_map(self, cod_size: usize) -> Result<FiniteMap> {
        if let Some(declared) = self.codomain_size {
            if declared != cod_size {
                return Err(Error::DimMismatch {
                    expected: cod_size,
                    got: declared,
                });
            }
        }
        let n = self.values.len();
        FiniteMap::new(n, cod_size, self.values)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    }
}

pub fn parse_group_json(src: &str, limits: &Limits) -> Result<FiniteGroup> {
    serde_json::from_str::<GroupFile>(src)
        .map_err(json_error)?
        .into_group(limits)
}

pub fn parse_digraph_json(src: &str) -> Result<ReflexiveDigraph> {
    serde_json::from_str::<DigraphFile>(src)
        .map_err(json_error)?
        .into_digraph()
}

pub fn parse_map_json(src: &str) -> Result<MapFile> {
    serde_json::from_str(src).map_err(json_error)
}

pub fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))
}

/// A parsed `--group` argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin(GroupKind),
    File(String),
}

const MAX_SUMMANDS: usize = 16;

impl GroupSpec {
    pub fn parse(src: &str) -> Result<Self> {
        let src = src.trim();
        if let Some(path) = src.strip_prefix("file:") {
            if path.is_empty() {
                return Err(Error::Parse {
                    pos: 5,
                    msg: "empty file path".into(),
                });
            }
            return Ok(GroupSpec::File(path.to_string()));
        }
        parse_group_kind(src).map(GroupSpec::Builtin)
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Builtin(kind) => kind.build(limits),
            GroupSpec::File(path) => parse_group_json(&read_file(path)?, limits),
        }
    }

    /// The builtin's standard generators, or a greedy non-redundant choice
    /// for groups read from a file.
    pub fn default_generators(&self, group: &FiniteGroup) -> Vec<usize> {
        match self {
            GroupSpec::Builtin(kind) => kind.default_generators(),
            GroupSpec::File(_) => group.greedy_generators(),
        }
    }
}

/// Parses the builtin part of a group specification, e.g. `z2^2+cyclic:3`.
pub fn parse_group_kind(src: &str) -> Result<GroupKind> {
    let mut offset = 0;
    let mut kinds = Vec::new();
    for part in src.split('+') {
        if kinds.len() == MAX_SUMMANDS {
            return Err(Error::Parse {
                pos: offset,
                msg: format!("more than {MAX_SUMMANDS} summands"),
            });
        }
        kinds.push(parse_summand(part.trim()).map_err(|msg| Error::Parse { pos: offset, msg })?);
        offset += part.len() + 1;
    }
    let mut iter = kinds.into_iter();
    let first = iter.next().expect("split yields at least one part");
    Ok(iter.fold(first, |acc, k| GroupKind::DirectSum(Box::new(acc), Box::new(k))))
}

fn parse_summand(s: &str) -> std::result::Result<GroupKind, String> {
    let number = |digits: &str| -> std::result::Result<usize, String> {
        let n: usize = digits
            .parse()
            .map_err(|_| format!("expected a positive integer, found {digits:?}"))?;
        if n == 0 {
            return Err("size must be positive".into());
        }
        Ok(n)
    };
    if let Some(rest) = s.strip_prefix("z2^") {
        return number(rest).map(GroupKind::Z2Power);
    }
    let (name, arg) = s
        .split_once(':')
        .ok_or_else(|| format!("unknown group {s:?}; expected e.g. cyclic:6, s:3, z2^3"))?;
    let n = number(arg)?;
    match name {
        "cyclic" | "c" | "z" => Ok(GroupKind::Cyclic(n)),
        "s" | "sym" => Ok(GroupKind::Symmetric(n)),
        "b" => Ok(GroupKind::Z2Power(n)),
        other => Err(format!("unknown group family {other:?}")),
    }
}

/// Resolves a comma-separated generator list by element name or index.
pub fn parse_generators(group: &FiniteGroup, src: &str) -> Result<Vec<usize>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for part in src.split(',') {
        let name = part.trim();
        let g = group.element_by_name(name).ok_or_else(|| Error::Parse {
            pos: offset,
            msg: format!("unknown element {name:?}"),
        })?;
        out.push(g);
        offset += part.len() + 1;
    }
    Ok(out)
}
