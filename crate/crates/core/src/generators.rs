//! Graph families and the embedded catalog of cubic cages.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters accepted by [`generate`]; each family reads the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub p: Option<f64>,
    pub seed: Option<u64>,
    pub t: Option<usize>,
}

pub const FAMILIES: &[&str] =
    &["complete", "path", "cycle", "grid", "petersen", "heawood", "mcgee", "tutte_coxeter", "tutte_12_cage", "gnp"];

pub fn generate(family: &str, params: &FamilyParams) -> Result<Graph> {
    let need_n = || params.n.ok_or_else(|| Error::InvalidArgument(format!("family `{family}` needs n")));
    match family {
        "complete" => complete(need_n()?),
        "path" => path(need_n()?),
        "cycle" => cycle(need_n()?),
        "grid" => grid(params.t.or(params.n).ok_or_else(|| Error::InvalidArgument("family `grid` needs t".into()))?),
        "petersen" => Ok(petersen()),
        "heawood" => Ok(heawood()),
        "mcgee" => Ok(mcgee()),
        "tutte_coxeter" => Ok(tutte_coxeter()),
        "tutte_12_cage" => Ok(tutte_12_cage()),
        "gnp" => {
            let p = params.p.ok_or_else(|| Error::InvalidArgument("family `gnp` needs p".into()))?;
            gnp(need_n()?, p, params.seed.unwrap_or(0))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The `t x t` grid; vertex `(i, j)` is `i * t + j`.
pub fn grid(t: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if j + 1 < t {
                edges.push((i * t + j, i * t + j + 1));
            }
            if i + 1 < t {
                edges.push((i * t + j, (i + 1) * t + j));
            }
        }
    }
    Graph::from_edges(t * t, edges)
}

/// Erdős–Rényi `G(n, p)`; the same seed always yields the same graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("p = {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Hamiltonian cubic graph from LCF notation: the cycle `0..n` plus a chord
/// from `i` to `i + shifts[i mod len]`.
pub fn from_lcf(n: usize, shifts: &[i64]) -> Result<Graph> {
    let mut g = cycle(n)?;
    for i in 0..n {
        let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(n as i64) as usize;
        if !g.has_edge(i, j) {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("static catalog")
}

/// (3,6)-cage, 14 vertices.
pub fn heawood() -> Graph {
    from_lcf(14, &[5, -5]).expect("static catalog")
}

/// (3,7)-cage, 24 vertices.
pub fn mcgee() -> Graph {
    from_lcf(24, &[12, 7, -7]).expect("static catalog")
}

/// (3,8)-cage, 30 vertices.
pub fn tutte_coxeter() -> Graph {
    from_lcf(30, &[-13, -9, 7, -7, 9, 13]).expect("static catalog")
}

/// (3,12)-cage, 126 vertices.
pub fn tutte_12_cage() -> Graph {
    from_lcf(126, &[17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17])
        .expect("static catalog")
}

/// A catalog entry with its advertised invariants, re-checked by the
/// high-girth suite before use.
#[derive(Clone, Copy, Debug)]
pub struct CageEntry {
    pub name: &'static str,
    pub order: usize,
    pub degree: usize,
    pub girth: u32,
    pub build: fn() -> Graph,
}

pub const CAGES: &[CageEntry] = &[
    CageEntry { name: "petersen", order: 10, degree: 3, girth: 5, build: petersen },
    CageEntry { name: "heawood", order: 14, degree: 3, girth: 6, build: heawood },
    CageEntry { name: "mcgee", order: 24, degree: 3, girth: 7, build: mcgee },
    CageEntry { name: "tutte_coxeter", order: 30, degree: 3, girth: 8, build: tutte_coxeter },
    CageEntry { name: "tutte_12_cage", order: 126, degree: 3, girth: 12, build: tutte_12_cage },
];

/// A uniformly paired `d`-regular multigraph, retried until simple.
/// Returns `None` after `attempts` failures.
pub fn random_regular(n: usize, d: usize, seed: u64, attempts: usize) -> Option<Graph> {
    if n * d % 2 == 1 || d >= n {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..attempts {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n).ok()?;
        for pair in points.chunks(2) {
            if g.add_edge(pair[0], pair[1]).is_err() {
                continue 'attempt;
            }
        }
        return Some(g);
    }
    None
}
