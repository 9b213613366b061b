//! Constructors for the named digraph families, with fixed vertex numbering
//! so encodings and test expectations are reproducible.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::digraph::Digraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("family `{family}` expects {expected} parameter(s), got {got}")]
    ParamCount {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("parameter out of range for `{family}`: {reason}")]
    ParamRange {
        family: &'static str,
        reason: &'static str,
    },
    #[error("bad family parameter `{0}`")]
    BadParam(String),
}

/// A family identifier together with its parameters.
///
/// Numbering conventions:
/// - `DirectedCycle(n)`: arcs `j -> j+1 (mod n)`.
/// - `OneReversedCycle(n)`: the directed cycle with the arc `n-1 -> 0`
///   reversed to `0 -> n-1`.
/// - `OneDigonCycle(n)`: the directed cycle with the arc `n-1 -> 0` widened
///   to a digon.
/// - `OneDigonReversedCycle(n)`: the directed cycle with `0 -> 1` reversed
///   and `1 -> 2` widened to a digon.
/// - `Necklace(n)`: rim vertices `v_j = j` for `j < 2n`, pendant vertices
///   `w_k = 2n + k`; arcs `v_j -> v_{j+1}`, `v_{2k} -> w_k`, `v_{2k+2} -> w_k`.
/// - `Xab(a, b)`: `x_j = j`, `y_j = a + j`, `z_l = 2a + l`; digons
///   `{x_j, y_j}`, arcs `x_j -> z_l` and `z_l -> y_j`.
/// - `Y(a, b)`: complete digon blocks on `0..a` and `a..a+b` with all arcs
///   from the first block to the second.
/// - `K3Prime`: digon `{1, 2}`, arcs `1 -> 0` and `0 -> 2`.
/// - `K4Prime`: digons `{0, 2}` and `{1, 3}`, arcs `1 -> 0 -> 3 -> 2 -> 1`.
/// - `Tournament(n)`: arcs `i -> j` for `i < j`.
/// - `CompleteGraph` / `CycleGraph` / `PathGraph` / `StarGraph`: all-digon
///   digraphs of the corresponding graphs (star centre is vertex 0).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    DirectedCycle(usize),
    OneReversedCycle(usize),
    OneDigonCycle(usize),
    OneDigonReversedCycle(usize),
    Necklace(usize),
    Xab(usize, usize),
    Y(usize, usize),
    K3Prime,
    K4Prime,
    Tournament(usize),
    CompleteGraph(usize),
    CycleGraph(usize),
    PathGraph(usize),
    StarGraph(usize),
    Empty(usize),
}

impl Family {
    pub fn build(self) -> Result<Digraph, FamilyError> {
        use Family::*;
        match self {
            DirectedCycle(n) => {
                require(n >= 3, "directed-cycle", "needs n >= 3")?;
                let mut d = Digraph::empty(n);
                for j in 0..n {
                    d.add_arc(j, (j + 1) % n);
                }
                Ok(d)
            }
            OneReversedCycle(n) => {
                require(n >= 3, "one-reversed-cycle", "needs n >= 3")?;
                let mut d = Digraph::empty(n);
                for j in 0..n - 1 {
                    d.add_arc(j, j + 1);
                }
                d.add_arc(0, n - 1);
                Ok(d)
            }
            OneDigonCycle(n) => {
                require(n >= 3, "one-digon-cycle", "needs n >= 3")?;
                let mut d = Digraph::empty(n);
                for j in 0..n - 1 {
                    d.add_arc(j, j + 1);
                }
                d.add_digon(n - 1, 0);
                Ok(d)
            }
            OneDigonReversedCycle(n) => {
                require(n >= 3, "one-digon-reversed-cycle", "needs n >= 3")?;
                let mut d = Digraph::empty(n);
                d.add_arc(1, 0);
                d.add_digon(1, 2);
                for j in 2..n {
                    d.add_arc(j, (j + 1) % n);
                }
                Ok(d)
            }
            Necklace(n) => {
                require(n >= 3, "necklace", "needs n >= 3")?;
                let mut d = Digraph::empty(3 * n);
                for j in 0..2 * n {
                    d.add_arc(j, (j + 1) % (2 * n));
                }
                for k in 0..n {
                    d.add_arc(2 * k, 2 * n + k);
                    d.add_arc((2 * k + 2) % (2 * n), 2 * n + k);
                }
                Ok(d)
            }
            Xab(a, b) => {
                require(a >= 1 && b >= 1, "xab", "needs a, b >= 1")?;
                let mut d = Digraph::empty(2 * a + b);
                for j in 0..a {
                    d.add_digon(j, a + j);
                    for l in 0..b {
                        d.add_arc(j, 2 * a + l);
                        d.add_arc(2 * a + l, a + j);
                    }
                }
                Ok(d)
            }
            Y(a, b) => {
                require(a >= 1 && b >= 1, "y", "needs a, b >= 1")?;
                let n = a + b;
                let mut d = Digraph::empty(n);
                for u in 0..n {
                    for v in (u + 1)..n {
                        if (u < a) == (v < a) {
                            d.add_digon(u, v);
                        } else {
                            d.add_arc(u, v); // u in the first block
                        }
                    }
                }
                Ok(d)
            }
            K3Prime => {
                let mut d = Digraph::empty(3);
                d.add_digon(1, 2);
                d.add_arc(1, 0);
                d.add_arc(0, 2);
                Ok(d)
            }
            K4Prime => {
                let mut d = Digraph::empty(4);
                d.add_digon(0, 2);
                d.add_digon(1, 3);
                d.add_arc(1, 0);
                d.add_arc(0, 3);
                d.add_arc(3, 2);
                d.add_arc(2, 1);
                Ok(d)
            }
            Tournament(n) => {
                require(n >= 1, "tournament", "needs n >= 1")?;
                let mut d = Digraph::empty(n);
                for i in 0..n {
                    for j in (i + 1)..n {
                        d.add_arc(i, j);
                    }
                }
                Ok(d)
            }
            CompleteGraph(n) => {
                require(n >= 1, "complete", "needs n >= 1")?;
                let mut d = Digraph::empty(n);
                for i in 0..n {
                    for j in (i + 1)..n {
                        d.add_digon(i, j);
                    }
                }
                Ok(d)
            }
            CycleGraph(n) => {
                require(n >= 3, "cycle", "needs n >= 3")?;
                let mut d = Digraph::empty(n);
                for j in 0..n {
                    d.add_digon(j, (j + 1) % n);
                }
                Ok(d)
            }
            PathGraph(n) => {
                require(n >= 1, "path", "needs n >= 1")?;
                let mut d = Digraph::empty(n);
                for j in 0..n.saturating_sub(1) {
                    d.add_digon(j, j + 1);
                }
                Ok(d)
            }
            StarGraph(n) => {
                require(n >= 1, "star", "needs n >= 1")?;
                let mut d = Digraph::empty(n);
                for j in 1..n {
                    d.add_digon(0, j);
                }
                Ok(d)
            }
            Empty(n) => Ok(Digraph::empty(n)),
        }
    }

    pub fn name(&self) -> &'static str {
        use Family::*;
        match self {
            DirectedCycle(_) => "D",
            OneReversedCycle(_) => "Ctilde",
            OneDigonCycle(_) => "CtildePrime",
            OneDigonReversedCycle(_) => "Ctilde2Prime",
            Necklace(_) => "necklace",
            Xab(..) => "Xab",
            Y(..) => "Y",
            K3Prime => "K3prime",
            K4Prime => "K4prime",
            Tournament(_) => "T",
            CompleteGraph(_) => "K",
            CycleGraph(_) => "C",
            PathGraph(_) => "P",
            StarGraph(_) => "star",
            Empty(_) => "E",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match self {
            Xab(a, b) | Y(a, b) => write!(f, "{}:{},{}", self.name(), a, b),
            K3Prime | K4Prime => write!(f, "{}", self.name()),
            DirectedCycle(n) | OneReversedCycle(n) | OneDigonCycle(n)
            | OneDigonReversedCycle(n) | Necklace(n) | Tournament(n) | CompleteGraph(n)
            | CycleGraph(n) | PathGraph(n) | StarGraph(n) | Empty(n) => {
                write!(f, "{}:{}", self.name(), n)
            }
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    /// Accepts `name` or `name:p1[,p2]`, case-insensitive in the name.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, p),
            None => (s, ""),
        };
        let params: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| FamilyError::BadParam(p.into())))
                .collect::<Result<_, _>>()?
        };
        let one = |family: &'static str| -> Result<usize, FamilyError> {
            if params.len() == 1 {
                Ok(params[0])
            } else {
                Err(FamilyError::ParamCount {
                    family,
                    expected: 1,
                    got: params.len(),
                })
            }
        };
        let two = |family: &'static str| -> Result<(usize, usize), FamilyError> {
            if params.len() == 2 {
                Ok((params[0], params[1]))
            } else {
                Err(FamilyError::ParamCount {
                    family,
                    expected: 2,
                    got: params.len(),
                })
            }
        };
        let lower = name.to_ascii_lowercase();
        Ok(match lower.as_str() {
            "d" => Family::DirectedCycle(one("D")?),
            "ctilde" => Family::OneReversedCycle(one("Ctilde")?),
            "ctildeprime" => Family::OneDigonCycle(one("CtildePrime")?),
            "ctilde2prime" => Family::OneDigonReversedCycle(one("Ctilde2Prime")?),
            "necklace" | "n" => Family::Necklace(one("necklace")?),
            "xab" | "x" => {
                let (a, b) = two("Xab")?;
                Family::Xab(a, b)
            }
            "y" => {
                let (a, b) = two("Y")?;
                Family::Y(a, b)
            }
            "k3prime" => no_params(&params, "K3prime", Family::K3Prime)?,
            "k4prime" => no_params(&params, "K4prime", Family::K4Prime)?,
            "t" => Family::Tournament(one("T")?),
            "k" => Family::CompleteGraph(one("K")?),
            "c" => Family::CycleGraph(one("C")?),
            "p" => Family::PathGraph(one("P")?),
            "star" | "s" => Family::StarGraph(one("star")?),
            "e" | "empty" => Family::Empty(one("E")?),
            _ => return Err(FamilyError::Unknown(name.into())),
        })
    }
}

fn no_params(params: &[usize], family: &'static str, f: Family) -> Result<Family, FamilyError> {
    if params.is_empty() {
        Ok(f)
    } else {
        Err(FamilyError::ParamCount {
            family,
            expected: 0,
            got: params.len(),
        })
    }
}

fn require(cond: bool, family: &'static str, reason: &'static str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::ParamRange { family, reason })
    }
}
