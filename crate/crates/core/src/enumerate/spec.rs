use crate::error::{Error, Result};
use crate::graph::{analyze, Graph, GraphFacts};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A family of simple graphs: regular of degree `d`, or every graph when
/// `all_graphs` is set, on `nmin..=nmax` vertices, filtered by the flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub d: Option<usize>,
    pub nmin: usize,
    pub nmax: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub min_girth: Option<usize>,
    pub all_graphs: bool,
}

impl FamilySpec {
    pub fn regular(d: usize, nmin: usize, nmax: usize) -> Self {
        FamilySpec {
            d: Some(d),
            nmin,
            nmax,
            connected: false,
            bipartite: false,
            triangle_free: false,
            min_girth: None,
            all_graphs: false,
        }
    }

    pub fn all(nmin: usize, nmax: usize) -> Self {
        FamilySpec {
            d: None,
            all_graphs: true,
            ..FamilySpec::regular(0, nmin, nmax)
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    pub fn triangle_free(mut self) -> Self {
        self.triangle_free = true;
        self
    }

    pub fn girth_at_least(mut self, g: usize) -> Self {
        self.min_girth = Some(g);
        self
    }

    /// Girth lower bound implied by the flags (3 means no constraint).
    pub(crate) fn girth_floor(&self) -> usize {
        let tf = if self.triangle_free { 4 } else { 3 };
        self.min_girth.unwrap_or(3).max(tf)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InfeasibleFamily(m));
        if self.all_graphs == self.d.is_some() {
            return bad("give exactly one of d=<degree> and all".into());
        }
        if self.nmin > self.nmax {
            return bad(format!("empty range {}..{}", self.nmin, self.nmax));
        }
        if let Some(g) = self.min_girth {
            if g < 3 {
                return bad(format!("min_girth must be at least 3, got {g}"));
            }
        }
        if let Some(d) = self.d {
            if self.orders().is_empty() {
                return bad(format!(
                    "no order in {}..={} admits a {d}-regular graph",
                    self.nmin, self.nmax
                ));
            }
        }
        Ok(())
    }

    /// Orders in range for which the family can be nonempty by parity and `d < n`.
    pub fn orders(&self) -> Vec<usize> {
        (self.nmin..=self.nmax)
            .filter(|&n| match self.d {
                Some(d) => (d * n) % 2 == 0 && d < n,
                None => true,
            })
            .collect()
    }

    /// Whether `g` belongs to the family.
    pub fn admits(&self, g: &Graph) -> bool {
        self.admits_facts(&analyze(g))
    }

    pub fn admits_facts(&self, f: &GraphFacts) -> bool {
        let n_ok = (self.nmin..=self.nmax).contains(&f.n);
        let d_ok = self.d.is_none_or(|d| f.is_regular(d));
        let conn_ok = !self.connected || f.components <= 1;
        let bip_ok = !self.bipartite || f.is_bipartite();
        let girth_ok = f.girth.is_none_or(|g| g >= self.girth_floor());
        n_ok && d_ok && conn_ok && bip_ok && girth_ok
    }
}

impl fmt::Display for FamilySpec {
    /// Canonical text form, accepted back by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "d={d}")?,
            None => f.write_str("all")?,
        }
        write!(f, ",nmin={},nmax={}", self.nmin, self.nmax)?;
        for (on, name) in [
            (self.connected, "connected"),
            (self.bipartite, "bipartite"),
            (self.triangle_free, "triangle_free"),
        ] {
            if on {
                write!(f, ",{name}")?;
            }
        }
        if let Some(g) = self.min_girth {
            write!(f, ",min_girth={g}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Comma separated: `d=3`, `all`, `n=10`, `nmin=4`, `nmax=12`,
    /// `connected`, `bipartite`, `triangle_free`, `min_girth=5` (alias `girth`).
    fn from_str(s: &str) -> Result<Self> {
        let mut spec = FamilySpec::regular(0, 0, 0);
        spec.d = None;
        let (mut nmin, mut nmax, mut n) = (None, None, None);
        let mut pos = 0;
        for item in s.split(',') {
            let item_pos = pos;
            pos += item.len() + 1;
            let item = item.trim();
            let err = |m: String| Error::parse("family", item_pos, m);
            let number = |v: &str| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("`{v}` is not a number")))
            };
            match item.split_once('=') {
                Some((key, value)) => match key.trim() {
                    "d" => spec.d = Some(number(value)?),
                    "n" => n = Some(number(value)?),
                    "nmin" => nmin = Some(number(value)?),
                    "nmax" => nmax = Some(number(value)?),
                    "min_girth" | "girth" => spec.min_girth = Some(number(value)?),
                    other => return Err(err(format!("unknown key `{other}`"))),
                },
                None => match item {
                    "all" => spec.all_graphs = true,
                    "connected" => spec.connected = true,
                    "bipartite" => spec.bipartite = true,
                    "triangle_free" | "triangle-free" => spec.triangle_free = true,
                    "" => return Err(err("empty item".into())),
                    other => return Err(err(format!("unknown flag `{other}`"))),
                },
            }
        }
        match (n, nmin, nmax) {
            (Some(n), None, None) => (spec.nmin, spec.nmax) = (n, n),
            (None, lo, Some(hi)) => {
                let floor = spec.d.map_or(if spec.all_graphs { 0 } else { 1 }, |d| d + 1);
                (spec.nmin, spec.nmax) = (lo.unwrap_or(floor), hi);
            }
            (None, _, None) => return Err(Error::parse("family", 0, "need n=<order> or nmax=<order>")),
            _ => return Err(Error::parse("family", 0, "n cannot be combined with nmin/nmax")),
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Largest orders the generators accept; overridable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    pub cubic: usize,
    pub quartic: usize,
    /// For all other degrees.
    pub regular: usize,
    pub all_graphs: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            cubic: 14,
            quartic: 11,
            regular: 12,
            all_graphs: 8,
        }
    }
}

impl EnumCaps {
    pub fn for_spec(&self, spec: &FamilySpec) -> usize {
        match spec.d {
            None => self.all_graphs,
            Some(3) => self.cubic,
            Some(4) => self.quartic,
            Some(_) => self.regular,
        }
    }

    pub(crate) fn check(&self, spec: &FamilySpec) -> Result<()> {
        let cap = self.for_spec(spec);
        if spec.nmax > cap {
            return Err(Error::CapExceeded {
                what: "family order",
                size: spec.nmax as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }
}
