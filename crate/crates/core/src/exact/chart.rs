use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of coordinate symbols. Zero coordinates is allowed and
/// stands for a point base.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    names: Vec<String>,
}

pub type ChartRef = Arc<Chart>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Chart {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<ChartRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = BTreeSet::new();
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::Schema(format!("invalid coordinate name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::Schema(format!("duplicate coordinate `{n}`")));
            }
        }
        Ok(Arc::new(Chart { names }))
    }

    pub fn point() -> ChartRef {
        Arc::new(Chart { names: Vec::new() })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownCoordinate(name.to_string()))
    }

    /// This chart followed by `more` coordinates.
    pub fn extend<S: AsRef<str>>(&self, more: &[S]) -> Result<ChartRef> {
        let mut names = self.names.clone();
        names.extend(more.iter().map(|s| s.as_ref().to_string()));
        Chart::new(&names)
    }

    pub fn same(a: &ChartRef, b: &ChartRef) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }

    pub fn ensure_same(a: &ChartRef, b: &ChartRef) -> Result<()> {
        if Chart::same(a, b) {
            Ok(())
        } else {
            Err(Error::ChartMismatch {
                left: a.to_string(),
                right: b.to_string(),
            })
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chart[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(Chart::new(&["x", "x"]).is_err());
        assert!(Chart::new(&["1x"]).is_err());
        assert!(Chart::new(&["x", "y_2", "k'"]).is_ok());
    }

    #[test]
    fn point_chart_is_empty() {
        let p = Chart::point();
        assert_eq!(p.dim(), 0);
        assert!(Chart::same(&p, &Chart::new::<&str>(&[]).unwrap()));
    }
}
