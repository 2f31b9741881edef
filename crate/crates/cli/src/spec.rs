//! Code specification documents (TOML).
//!
//! ```toml
//! sets = [[1, 3, 4, 5]]
//!
//! [field]
//! p = 7
//! e = 1
//!
//! [exponents]
//! family = "box"
//! corner = [1]
//! ```
//!
//! `family` is one of `list` (with `vectors`), `box` (with `corner`) or
//! `simplex` (with `r`). Integers are canonical element encodings.

use std::path::Path;

use moncart::{CartesianSet, Exponent, ExponentSet, Field};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub p: u64,
    #[serde(default = "one")]
    pub e: u32,
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum ExponentsDoc {
    List { vectors: Vec<Vec<u32>> },
    Box { corner: Vec<u32> },
    Simplex { r: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecDocument {
    pub field: FieldDoc,
    pub sets: Vec<Vec<u64>>,
    pub exponents: ExponentsDoc,
}

/// A decoded specification.
pub struct CodeSpec {
    pub set: CartesianSet,
    pub exponents: ExponentSet,
}

impl CodeSpecDocument {
    pub fn parse(text: &str) -> Result<CodeSpecDocument, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string().trim_end().to_string()))
    }

    pub fn decode(&self) -> Result<CodeSpec, CliError> {
        let sem = |what: &str, e: moncart::Error| CliError::Semantic(format!("{what}: {e}"));
        let field =
            Field::new(self.field.p, self.field.e, self.field.modulus.as_deref()).map_err(|e| sem("field", e))?;
        let set = CartesianSet::from_values(&field, &self.sets).map_err(|e| sem("sets", e))?;
        let sizes = set.sizes();
        let exponents = match &self.exponents {
            ExponentsDoc::List { vectors } => ExponentSet::new(&sizes, vectors.iter().cloned().map(Exponent).collect()),
            ExponentsDoc::Box { corner } => ExponentSet::box_corner(&sizes, corner),
            ExponentsDoc::Simplex { r } => ExponentSet::simplex(&sizes, *r),
        }
        .map_err(|e| sem("exponents", e))?;
        Ok(CodeSpec { set, exponents })
    }
}

pub fn load(path: &Path) -> Result<CodeSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    CodeSpecDocument::parse(&text)
        .map_err(|e| e.context(&path.display().to_string()))?
        .decode()
        .map_err(|e| e.context(&path.display().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let doc = CodeSpecDocument::parse(
            "sets = [[1,2,3,4],[1,2,3,4]]\n[field]\np = 5\n[exponents]\nfamily = \"simplex\"\nr = 1\n",
        )
        .unwrap();
        assert_eq!(doc.decode().unwrap().exponents.len(), 3);
        let doc = CodeSpecDocument::parse(
            "sets = [[0,1,2,3]]\n[field]\np = 2\ne = 2\n[exponents]\nfamily = \"list\"\nvectors = [[0],[3]]\n",
        )
        .unwrap();
        let spec = doc.decode().unwrap();
        assert_eq!(spec.set.field().q(), 4);
        assert_eq!(spec.exponents.len(), 2);
    }

    #[test]
    fn error_classes() {
        let parse =
            CodeSpecDocument::parse("sets = [[1]]\n[field]\nq = 7\n[exponents]\nfamily = \"box\"\ncorner = [0]\n");
        assert!(matches!(parse, Err(CliError::Parse(m)) if m.contains("line")));
        let doc =
            CodeSpecDocument::parse("sets = [[1,3]]\n[field]\np = 7\n[exponents]\nfamily = \"box\"\ncorner = [2]\n")
                .unwrap();
        assert!(matches!(doc.decode(), Err(CliError::Semantic(m)) if m.contains("[2]")));
        let doc =
            CodeSpecDocument::parse("sets = [[1,3]]\n[field]\np = 6\n[exponents]\nfamily = \"box\"\ncorner = [0]\n")
                .unwrap();
        assert!(matches!(doc.decode(), Err(CliError::Semantic(_))));
    }
}
