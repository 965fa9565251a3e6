use serde::{Deserialize, Serialize};

use crate::error::{param, Result};

/// The forbidden structures a colouring is tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Pattern {
    /// The cycle `C_m`.
    Cycle { m: usize },
    /// Either of the cycles `C_m` and `C_{m+1}`.
    CyclePair { m: usize },
    /// The complete bipartite graph `K_{2,n}`.
    K2n { n: usize },
}

/// A pattern together with its chromatic number and the smallest colour
/// class size over optimal colourings, the two quantities in the
/// chromatic-surplus lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternParams {
    pub pattern: Pattern,
    pub chi: usize,
    pub sigma: usize,
}

impl PatternParams {
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return param(format!("a cycle needs m ≥ 3, got {m}"));
        }
        let (chi, sigma) = if m.is_multiple_of(2) { (2, m / 2) } else { (3, 1) };
        Ok(PatternParams { pattern: Pattern::Cycle { m }, chi, sigma })
    }

    /// The pair `{C_m, C_{m+1}}`. Exactly one of the two is even, and a
    /// colouring avoiding both must in particular avoid the even one, so the
    /// pair uses the bipartite parameters of its even member.
    pub fn cycle_pair(m: usize) -> Result<Self> {
        if m < 3 {
            return param(format!("a cycle pair needs m ≥ 3, got {m}"));
        }
        let even = if m.is_multiple_of(2) { m } else { m + 1 };
        Ok(PatternParams { pattern: Pattern::CyclePair { m }, chi: 2, sigma: even / 2 })
    }

    /// `K_{2,n}` with `χ = 2` and `σ = 2`; `n ≥ 2` so that the small side is
    /// the smaller colour class.
    pub fn k2n(n: usize) -> Result<Self> {
        if n < 2 {
            return param(format!("K_{{2,n}} parameters need n ≥ 2, got {n}"));
        }
        Ok(PatternParams { pattern: Pattern::K2n { n }, chi: 2, sigma: 2 })
    }

    /// `(g_order − 1)(χ − 1) + σ`: every colouring below this order can be
    /// chosen to avoid both a connected graph on `g_order` vertices in red and
    /// this pattern in blue.
    pub fn burr_bound(&self, g_order: usize) -> usize {
        (g_order.saturating_sub(1)) * (self.chi - 1) + self.sigma
    }

    pub fn is_even_cycle(&self) -> Option<bool> {
        match self.pattern {
            Pattern::Cycle { m } => Some(m % 2 == 0),
            _ => None,
        }
    }
}
