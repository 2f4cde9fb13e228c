use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Identity of a chart coordinate.  Indices are 1-based and small (the base
/// dimension never exceeds 4).
///
/// Symmetric index groups are stored canonically sorted: `(i, j)` with
/// `i <= j` for every metric group, `(k, l)` with `k <= l` for the second
/// metric jet and `(k, l, m)` sorted for the third.  Connection indices
/// `A^h_{jk}` are stored as given; torsion-free charts canonicalise `j <= k`
/// at construction time (see [`crate::charts::ChartSpec`]).  Two `VarId`s are
/// equal exactly when their canonical forms are.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// Base coordinate `x^i`.
    X(u8),
    /// Metric fibre coordinate `y_{ij}`, `i <= j`.
    Y(u8, u8),
    /// First metric jet `y_{ij,k}`, `i <= j`.
    YJet(u8, u8, u8),
    /// Second metric jet `y_{ij,kl}`, `i <= j`, `k <= l`.
    YJet2(u8, u8, u8, u8),
    /// Third metric jet `y_{ij,klm}`, `i <= j`, `k <= l <= m`.
    YJet3(u8, u8, u8, u8, u8),
    /// Connection fibre coordinate `A^h_{jk}`.
    A(u8, u8, u8),
    /// First connection jet `A^h_{jk,l}`.
    AJet(u8, u8, u8, u8),
}

fn sort2(a: u8, b: u8) -> (u8, u8) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn sort3(a: u8, b: u8, c: u8) -> (u8, u8, u8) {
    let mut v = [a, b, c];
    v.sort_unstable();
    (v[0], v[1], v[2])
}

impl VarId {
    pub fn x(i: u8) -> Self {
        VarId::X(i)
    }

    pub fn y(i: u8, j: u8) -> Self {
        let (i, j) = sort2(i, j);
        VarId::Y(i, j)
    }

    pub fn y_jet(i: u8, j: u8, k: u8) -> Self {
        let (i, j) = sort2(i, j);
        VarId::YJet(i, j, k)
    }

    pub fn y_jet2(i: u8, j: u8, k: u8, l: u8) -> Self {
        let (i, j) = sort2(i, j);
        let (k, l) = sort2(k, l);
        VarId::YJet2(i, j, k, l)
    }

    pub fn y_jet3(i: u8, j: u8, k: u8, l: u8, m: u8) -> Self {
        let (i, j) = sort2(i, j);
        let (k, l, m) = sort3(k, l, m);
        VarId::YJet3(i, j, k, l, m)
    }

    /// Connection coordinate with the lower pair kept in the given order.
    pub fn a(h: u8, j: u8, k: u8) -> Self {
        VarId::A(h, j, k)
    }

    /// Connection coordinate on a torsion-free chart: lower pair sorted.
    pub fn a_sym(h: u8, j: u8, k: u8) -> Self {
        let (j, k) = sort2(j, k);
        VarId::A(h, j, k)
    }

    pub fn a_jet(h: u8, j: u8, k: u8, l: u8) -> Self {
        VarId::AJet(h, j, k, l)
    }

    pub fn a_jet_sym(h: u8, j: u8, k: u8, l: u8) -> Self {
        let (j, k) = sort2(j, k);
        VarId::AJet(h, j, k, l)
    }

    /// The jet coordinate obtained by differentiating this one in direction
    /// `dir`, with the canonical sorting applied.  `None` when the coordinate
    /// admits no further jet layer in this atlas.
    pub fn jet(self, dir: u8) -> Option<VarId> {
        match self {
            VarId::X(_) => None,
            VarId::Y(i, j) => Some(VarId::YJet(i, j, dir)),
            VarId::YJet(i, j, k) => Some(VarId::y_jet2(i, j, k, dir)),
            VarId::YJet2(i, j, k, l) => Some(VarId::y_jet3(i, j, k, l, dir)),
            VarId::YJet3(..) => None,
            VarId::A(h, j, k) => Some(VarId::AJet(h, j, k, dir)),
            VarId::AJet(..) => None,
        }
    }

    /// Order of the jet layer this coordinate belongs to (base and fibre
    /// coordinates are order 0).
    pub fn jet_order(self) -> u8 {
        match self {
            VarId::X(_) | VarId::Y(..) | VarId::A(..) => 0,
            VarId::YJet(..) | VarId::AJet(..) => 1,
            VarId::YJet2(..) => 2,
            VarId::YJet3(..) => 3,
        }
    }

    pub fn is_base(self) -> bool {
        matches!(self, VarId::X(_))
    }

    pub fn is_jet(self) -> bool {
        self.jet_order() > 0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarId::X(i) => write!(f, "x_{i}"),
            VarId::Y(i, j) => write!(f, "y_{i}{j}"),
            VarId::YJet(i, j, k) => write!(f, "y_{i}{j}_{k}"),
            VarId::YJet2(i, j, k, l) => write!(f, "y_{i}{j}_{k}{l}"),
            VarId::YJet3(i, j, k, l, m) => write!(f, "y_{i}{j}_{k}{l}{m}"),
            VarId::A(h, j, k) => write!(f, "A_{h}_{j}{k}"),
            VarId::AJet(h, j, k, l) => write!(f, "A_{h}_{j}{k}_{l}"),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn digits(s: &str) -> Result<Vec<u8>, Error> {
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as u8)
                .filter(|&d| d >= 1)
                .ok_or_else(|| Error::Parse(format!("bad index group `{s}`")))
        })
        .collect()
}

impl FromStr for VarId {
    type Err = Error;

    /// Parses the textual names produced by `Display`: `x_1`, `y_12`,
    /// `y_12_3`, `y_12_34`, `y_12_345`, `A_1_23`, `A_1_23_4`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split('_').collect();
        let bad = || Error::Parse(format!("bad variable name `{s}`"));
        match parts.as_slice() {
            ["x", i] => {
                let d = digits(i)?;
                if d.len() != 1 {
                    return Err(bad());
                }
                Ok(VarId::X(d[0]))
            }
            ["y", ij] => {
                let d = digits(ij)?;
                if d.len() != 2 || d[0] > d[1] {
                    return Err(bad());
                }
                Ok(VarId::Y(d[0], d[1]))
            }
            ["y", ij, jets] => {
                let d = digits(ij)?;
                let j = digits(jets)?;
                if d.len() != 2 || d[0] > d[1] {
                    return Err(bad());
                }
                match j.as_slice() {
                    [k] => Ok(VarId::YJet(d[0], d[1], *k)),
                    [k, l] if k <= l => Ok(VarId::YJet2(d[0], d[1], *k, *l)),
                    [k, l, m] if k <= l && l <= m => Ok(VarId::YJet3(d[0], d[1], *k, *l, *m)),
                    _ => Err(bad()),
                }
            }
            ["A", h, jk] => {
                let h = digits(h)?;
                let jk = digits(jk)?;
                if h.len() != 1 || jk.len() != 2 {
                    return Err(bad());
                }
                Ok(VarId::A(h[0], jk[0], jk[1]))
            }
            ["A", h, jk, l] => {
                let h = digits(h)?;
                let jk = digits(jk)?;
                let l = digits(l)?;
                if h.len() != 1 || jk.len() != 2 || l.len() != 1 {
                    return Err(bad());
                }
                Ok(VarId::AJet(h[0], jk[0], jk[1], l[0]))
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_groups_are_sorted() {
        assert_eq!(VarId::y(2, 1), VarId::Y(1, 2));
        assert_eq!(VarId::y_jet2(2, 1, 3, 1), VarId::YJet2(1, 2, 1, 3));
        assert_eq!(VarId::a_sym(1, 3, 2), VarId::A(1, 2, 3));
        // full-chart connection coordinates keep their order
        assert_ne!(VarId::a(1, 2, 1), VarId::a(1, 1, 2));
    }

    #[test]
    fn jets_canonicalise() {
        assert_eq!(VarId::y(1, 1).jet(2), Some(VarId::YJet(1, 1, 2)));
        assert_eq!(
            VarId::YJet(1, 2, 3).jet(1),
            Some(VarId::YJet2(1, 2, 1, 3))
        );
        assert_eq!(VarId::x(1).jet(1), None);
    }

    #[test]
    fn names_round_trip() {
        let vars = [
            VarId::x(1),
            VarId::y(1, 2),
            VarId::y_jet(2, 2, 1),
            VarId::y_jet2(1, 2, 2, 1),
            VarId::y_jet3(1, 1, 3, 2, 1),
            VarId::a(2, 3, 1),
            VarId::a_jet(1, 2, 2, 4),
        ];
        for v in vars {
            let s = v.to_string();
            assert_eq!(s.parse::<VarId>().unwrap(), v, "round-trip of `{s}`");
        }
    }
}
