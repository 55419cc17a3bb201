//! Surfaces and closed-form bounds, all in exact integer or rational
//! arithmetic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("{0}")]
    Domain(String),
    #[error("cannot parse surface {0:?} (expected e.g. S0, S5, N1, N10)")]
    Parse(String),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, SurfaceError> {
    Err(SurfaceError::Domain(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Orientable,
    Nonorientable,
}

/// `S_g` (sphere with `g` handles) or `N_g` (sphere with `g >= 1` cross-caps).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surface {
    pub kind: SurfaceKind,
    pub genus: u32,
}

impl Surface {
    pub fn orientable(genus: u32) -> Self {
        Self { kind: SurfaceKind::Orientable, genus }
    }

    pub fn nonorientable(genus: u32) -> Result<Self, SurfaceError> {
        if genus == 0 {
            return domain("nonorientable genus must be at least 1");
        }
        Ok(Self { kind: SurfaceKind::Nonorientable, genus })
    }

    pub fn euler_characteristic(&self) -> i64 {
        match self.kind {
            SurfaceKind::Orientable => 2 - 2 * self.genus as i64,
            SurfaceKind::Nonorientable => 2 - self.genus as i64,
        }
    }

    pub fn from_characteristic(c: i64, kind: SurfaceKind) -> Result<Self, SurfaceError> {
        match kind {
            SurfaceKind::Orientable if c <= 2 && c % 2 == 0 => Ok(Self::orientable(((2 - c) / 2) as u32)),
            SurfaceKind::Orientable => domain(format!("no orientable surface has characteristic {c}")),
            SurfaceKind::Nonorientable if c <= 1 => Self::nonorientable((2 - c) as u32),
            SurfaceKind::Nonorientable => domain(format!("no nonorientable surface has characteristic {c}")),
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SurfaceKind::Orientable => write!(f, "S{}", self.genus),
            SurfaceKind::Nonorientable => write!(f, "N{}", self.genus),
        }
    }
}

impl FromStr for Surface {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, SurfaceError> {
        let t = s.trim();
        let bad = || SurfaceError::Parse(s.to_string());
        match t.to_ascii_lowercase().as_str() {
            "sphere" => return Ok(Self::orientable(0)),
            "torus" => return Ok(Self::orientable(1)),
            "projective-plane" => return Self::nonorientable(1),
            "klein-bottle" => return Self::nonorientable(2),
            _ => {}
        }
        let (head, rest) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let genus: u32 = rest.parse().map_err(|_| bad())?;
        match head {
            "S" | "s" => Ok(Self::orientable(genus)),
            "N" | "n" => Self::nonorientable(genus).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// `⌊√x⌋` for `x >= 0`.
fn isqrt(x: i64) -> i64 {
    debug_assert!(x >= 0);
    (x as u64).isqrt() as i64
}

/// `H(c) = ⌊(7 + √(49 − 24c))/2⌋`, the Heawood number, for `c <= 2`.
pub fn heawood_number(c: i64) -> Result<i64, SurfaceError> {
    if c > 2 {
        return domain(format!("Heawood number needs c <= 2, got {c}"));
    }
    Ok((7 + isqrt(49 - 24 * c)) / 2)
}

/// `3n − 3c`, the edge bound for simple graphs on a surface, `n >= 3`.
pub fn max_edges(n: i64, c: i64) -> Result<i64, SurfaceError> {
    if n < 3 {
        return domain(format!("edge bound needs n >= 3, got {n}"));
    }
    Ok(3 * n - 3 * c)
}

/// Kronk's vertex-arboricity bound `⌊(9 + √(49 − 24c))/4⌋`, for `c <= 1`.
pub fn arboricity_bound(c: i64) -> Result<i64, SurfaceError> {
    if c > 1 {
        return domain(format!("arboricity bound needs c <= 1, got {c}"));
    }
    Ok((9 + isqrt(49 - 24 * c)) / 4)
}

fn floor(r: Rational64) -> i64 {
    r.floor().to_integer()
}

/// `ε = (k−2)/(2k²+3k−4)`, written for `(k+1)`-dicritical digraphs.
fn epsilon(k: i64) -> Rational64 {
    Rational64::new(k - 2, 2 * k * k + 3 * k - 4)
}

/// Upper bound on the order of a `k`-dicritical oriented graph (`oriented`)
/// or digraph embedded in a surface of characteristic `c`. Takes the
/// smallest of the applicable bounds:
///
/// * oriented, `k = 4`: `4 − 9c`;
/// * oriented, `k >= 5`: `⌊−3c/(k−4)⌋`;
/// * any digraph, `k >= 8`: `⌊−6c/(k−7)⌋`;
/// * any digraph other than the bidirected `K_k`, `k >= 7`:
///   `⌊−6c/(k−7+ε)⌋` with `ε` taken at `k−1`.
///
/// Digraph bounds also apply to oriented graphs. `None` when no bound
/// applies.
pub fn dicritical_order_bound(k: i64, c: i64, oriented: bool) -> Option<i64> {
    let mut best: Option<i64> = None;
    let mut take = |b: i64| best = Some(best.map_or(b, |x| x.min(b)));
    if oriented && k == 4 {
        take(4 - 9 * c);
    }
    if oriented && k >= 5 {
        take(floor(Rational64::new(-3 * c, k - 4)));
    }
    if k >= 8 {
        take(floor(Rational64::new(-6 * c, k - 7)));
    }
    if k >= 7 {
        let denom = Rational64::from_integer(k - 7) + epsilon(k - 1);
        take(floor(Rational64::from_integer(-6 * c) / denom));
    }
    best
}

/// Lower bound `(k + ε)·n` on the arc count of a `(k+1)`-dicritical digraph
/// of order `n` other than the bidirected `K_{k+1}`; needs `k >= 3`.
pub fn dicritical_min_arcs(k_plus_1: i64, n: i64) -> Result<Rational64, SurfaceError> {
    let k = k_plus_1 - 1;
    if k < 3 {
        return domain(format!("density bound needs k + 1 >= 4, got {k_plus_1}"));
    }
    Ok((Rational64::from_integer(k) + epsilon(k)) * Rational64::from_integer(n))
}

/// `⌈h/(2·log₂h + 1)⌉`, evaluated exactly: the least integer `t` with
/// `h^{2t} >= 2^{h−t}`.
pub fn tournament_chi_lower(h: u32) -> u32 {
    if h <= 1 {
        return h;
    }
    let hb = BigUint::from(h);
    (1..=h).find(|&t| t >= h || hb.pow(2 * t) >= BigUint::from(1u8) << (h - t)).expect("t = h always qualifies")
}

/// Largest `t` with `K_t` embeddable on the surface: `H(c)`, except 6 on
/// the Klein bottle.
pub fn complete_graph_order(s: &Surface) -> i64 {
    let c = s.euler_characteristic();
    let h = heawood_number(c).expect("surface characteristics are at most 2");
    if s.kind == SurfaceKind::Nonorientable && s.genus == 2 {
        h - 1
    } else {
        h
    }
}

/// `⌈H(c)/(2·log₂H(c) + 1)⌉`: some tournament on `H(c)` vertices has at
/// least this dichromatic number. Needs `c <= 2`.
pub fn tournament_lower_bound(c: i64) -> Result<i64, SurfaceError> {
    Ok(tournament_chi_lower(heawood_number(c)? as u32) as i64)
}

/// As [`tournament_lower_bound`], evaluated at the largest complete graph
/// that actually embeds in `s`.
pub fn surface_tournament_lower_bound(s: &Surface) -> i64 {
    tournament_chi_lower(complete_graph_order(s) as u32) as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// A directed triangle embeds everywhere.
    DirectedTriangle,
    /// Planar oriented graphs are 3-dicolourable.
    PlanarThreeDicolourable,
    /// An oriented graph of dichromatic number 3 embeds in every surface
    /// other than the sphere.
    NonPlanarLowerThree,
    /// Exact value 3 on the projective plane, torus, Klein bottle and `N3`.
    LowGenusExact,
    /// `ST_11` embeds when `c <= -8`.
    St11Embedding,
    /// Oriented graphs on `S5`/`N10`, hence on surfaces with `c >= -8`, are
    /// 4-dicolourable.
    FourDicolourableUpToMinusEight,
    /// Dense tournament on the largest embeddable complete graph.
    TournamentOnCompleteGraph,
    /// Kronk's vertex-arboricity bound.
    KronkArboricity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub surface: Surface,
    pub euler_characteristic: i64,
    pub lower: i64,
    pub upper: i64,
    pub provenance: Vec<BoundSource>,
}

/// Best known lower and upper bounds for the dichromatic number of `s`.
pub fn dichromatic_bounds(s: &Surface) -> BoundRecord {
    use BoundSource::*;
    let c = s.euler_characteristic();
    let mut lower = (2, DirectedTriangle);
    let mut raise = |v: i64, src: BoundSource| {
        if v > lower.0 {
            lower = (v, src);
        }
    };
    if c <= 1 {
        raise(3, NonPlanarLowerThree);
    }
    if c <= -8 {
        raise(4, St11Embedding);
    }
    raise(surface_tournament_lower_bound(s), TournamentOnCompleteGraph);

    let low_genus = matches!((s.kind, s.genus), (SurfaceKind::Nonorientable, 1..=3) | (SurfaceKind::Orientable, 1));
    let upper = if c == 2 {
        (3, PlanarThreeDicolourable)
    } else if low_genus {
        (3, LowGenusExact)
    } else {
        let kronk = arboricity_bound(c).expect("c <= 1 here");
        if c >= -8 && 4 < kronk {
            (4, FourDicolourableUpToMinusEight)
        } else {
            (kronk, KronkArboricity)
        }
    };
    let mut provenance = vec![lower.1];
    if upper.1 != lower.1 {
        provenance.push(upper.1);
    }
    BoundRecord { surface: *s, euler_characteristic: c, lower: lower.0, upper: upper.0, provenance }
}

/// The surfaces listed in the standard table of small surfaces, one
/// representative per listed name, ordered by decreasing characteristic.
pub fn table_surfaces() -> Vec<Surface> {
    let s = Surface::orientable;
    let n = |g| Surface::nonorientable(g).expect("genus >= 1");
    vec![s(0), n(1), n(2), s(1), n(3), s(2), n(4), n(5), s(3), n(6), n(7), s(4), n(8), n(9), s(5), n(10)]
}
