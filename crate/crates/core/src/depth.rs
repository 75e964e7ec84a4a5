use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A radius or path-length bound: a natural number or unbounded.
///
/// The derived ordering puts every finite value below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Depth {
    Finite(u32),
    Infinite,
}

impl Depth {
    pub const ZERO: Depth = Depth::Finite(0);

    /// `mul * r + add`, with `Infinite` absorbing.
    pub fn affine(self, mul: u32, add: u32) -> Depth {
        match self {
            Depth::Finite(r) => Depth::Finite(r.saturating_mul(mul).saturating_add(add)),
            Depth::Infinite => Depth::Infinite,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Depth::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Depth::Finite(r) => Some(r),
            Depth::Infinite => None,
        }
    }

    /// Whether a distance `d` is within this bound.
    pub fn admits(self, d: u32) -> bool {
        match self {
            Depth::Finite(r) => d <= r,
            Depth::Infinite => true,
        }
    }

    /// On an `n`-vertex graph no simple path has more than `n - 1` edges and
    /// no connected induced subgraph has radius above `n - 1`, so any bound
    /// `>= n - 1` behaves exactly like `Infinite`.
    pub fn saturate(self, n: usize) -> Depth {
        match self {
            Depth::Finite(r) if (r as usize) + 1 >= n => Depth::Infinite,
            d => d,
        }
    }
}

impl From<u32> for Depth {
    fn from(r: u32) -> Self {
        Depth::Finite(r)
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(r) => write!(f, "{r}"),
            Depth::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Depth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Depth::Infinite),
            t => t.parse::<u32>().map(Depth::Finite).map_err(|_| Error::InvalidArgument(format!("bad depth `{s}`"))),
        }
    }
}

impl Serialize for Depth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Depth::Finite(r) => s.serialize_u32(*r),
            Depth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Depth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(r) => Ok(Depth::Finite(r)),
            Raw::Text(t) => t.parse().map_err(de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_the_maximum() {
        assert!(Depth::Finite(u32::MAX) < Depth::Infinite);
        assert!(Depth::Finite(2) < Depth::Finite(3));
    }

    #[test]
    fn affine_forms() {
        let r = Depth::Finite(2);
        assert_eq!(r.affine(3, 1), Depth::Finite(7));
        assert_eq!(r.affine(4, 1), Depth::Finite(9));
        assert_eq!(r.affine(5, 1), Depth::Finite(11));
        assert_eq!(Depth::Infinite.affine(5, 1), Depth::Infinite);
    }

    #[test]
    fn parse_and_serde() {
        assert_eq!("inf".parse::<Depth>().unwrap(), Depth::Infinite);
        assert_eq!("4".parse::<Depth>().unwrap(), Depth::Finite(4));
        assert!("x".parse::<Depth>().is_err());
        let js = serde_json::to_string(&vec![Depth::Finite(3), Depth::Infinite]).unwrap();
        assert_eq!(js, r#"[3,"inf"]"#);
        let back: Vec<Depth> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, vec![Depth::Finite(3), Depth::Infinite]);
    }

    #[test]
    fn saturation() {
        assert_eq!(Depth::Finite(5).saturate(6), Depth::Infinite);
        assert_eq!(Depth::Finite(4).saturate(6), Depth::Finite(4));
        assert_eq!(Depth::Finite(0).saturate(1), Depth::Infinite);
    }
}
