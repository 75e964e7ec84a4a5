use crate::error::{Error, Result};

pub const DEFAULT_MAX_VERTICES: usize = 16;
pub const DEFAULT_EXHAUSTIVE_MAX: usize = 10;
pub const MAX_VERTICES_ENV: &str = "SHALLOW_MAX_VERTICES";

/// Size limits for the enumeration-based searches.
///
/// `max_vertices` is a hard cap on anything that enumerates vertex subsets.
/// The parameter searches (several of them doubly exponential) additionally
/// refuse graphs above `exhaustive_max` unless `force` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub exhaustive_max: usize,
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: DEFAULT_MAX_VERTICES, exhaustive_max: DEFAULT_EXHAUSTIVE_MAX, force: false }
    }
}

impl Limits {
    /// Defaults, with `max_vertices` overridden by `SHALLOW_MAX_VERTICES`
    /// when it is set to a number.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = std::env::var(MAX_VERTICES_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            l.max_vertices = v;
        }
        l
    }

    pub fn forced(mut self) -> Self {
        self.force = true;
        self
    }

    pub fn check_enumeration(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_vertices.min(crate::vset::MAX_VERTICES) {
            return Err(Error::CapExceeded {
                what,
                n,
                limit: self.max_vertices,
                hint: "; raise with --max-vertices or SHALLOW_MAX_VERTICES",
            });
        }
        Ok(())
    }

    pub fn check_exhaustive(&self, what: &'static str, n: usize) -> Result<()> {
        self.check_enumeration(what, n)?;
        if n > self.exhaustive_max {
            if !self.force {
                return Err(Error::CapExceeded {
                    what,
                    n,
                    limit: self.exhaustive_max,
                    hint: "; pass --force to run anyway",
                });
            }
            log::warn!("{what} on {n} vertices: exhaustive search may take very long");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        let l = Limits::default();
        assert!(l.check_exhaustive("x", 10).is_ok());
        assert!(l.check_exhaustive("x", 11).is_err());
        assert!(l.forced().check_exhaustive("x", 11).is_ok());
        assert!(l.forced().check_exhaustive("x", 17).is_err());
        assert!(l.check_enumeration("x", 16).is_ok());
    }
}
