//! Ordered variable registries.
//!
//! Every polynomial carries an explicit registry; there is no global variable
//! table. Two polynomials are compatible iff their registries list the same
//! names in the same order.

use std::sync::Arc;

use crate::error::PolyError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    // `i` is reserved for the imaginary unit in the text format.
    name != "i" && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl VarRegistry {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(PolyError::InvalidVariableName(n.clone()));
            }
            if names[..k].contains(n) {
                return Err(PolyError::DuplicateVariableName(n.clone()));
            }
        }
        Ok(Arc::new(VarRegistry { names }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    /// Comma-separated name list, as used in error messages and `.poly` headers.
    pub fn joined(&self) -> String {
        self.names.join(",")
    }

    /// A name not present in this registry: `base`, then `base0`, `base1`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        let mut k = 0usize;
        loop {
            let cand = format!("{base}{k}");
            if self.index_of(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(VarRegistry::new(["i"]).is_err());
        assert!(VarRegistry::new(["2x"]).is_err());
        assert!(VarRegistry::new(["x", "x"]).is_err());
        assert!(VarRegistry::new(["x y"]).is_err());
    }

    #[test]
    fn fresh_names() {
        let reg = VarRegistry::new(["t", "t0"]).unwrap();
        assert_eq!(reg.fresh_name("t"), "t1");
        assert_eq!(reg.fresh_name("u"), "u");
    }
}
