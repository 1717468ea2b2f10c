//! Sign calculus for graded orientation sets.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// A sign `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn pow(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn from_odd(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        T::from_i64(self.to_i64())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_odd(self != rhs)
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Which of the two orientation conventions of the Koszul complex is in use.
/// Only colored edges are affected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Description {
    /// Colored edge of color `i` has degree `m_i - 1`.
    First,
    /// Colored edge has degree `-1`.
    Second,
}

/// Kind of an element of an orientation set. Colors are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrientationKind {
    NonColoredEdge,
    ColoredEdge(usize),
    InternalVertex,
    ExternalVertex(usize),
    ColoredComponent(usize),
}

/// Ambient parameters `(m_1, ..., m_r; d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub m: Vec<i64>,
    pub d: i64,
}

impl Params {
    pub fn new(m: Vec<i64>, d: i64) -> Result<Params> {
        if m.is_empty() {
            return invalid("at least one color is required");
        }
        if m.iter().any(|&mi| mi < 1) {
            return invalid("every m_i must be at least 1");
        }
        if d < 2 {
            return invalid("ambient dimension d must be at least 2");
        }
        Ok(Params { m, d })
    }

    pub fn r(&self) -> usize {
        self.m.len()
    }

    pub fn max_m(&self) -> i64 {
        self.m.iter().copied().max().unwrap_or(0)
    }

    /// `d - max m_i`.
    pub fn codimension(&self) -> i64 {
        self.d - self.max_m()
    }

    /// True when every strand has codimension greater than two.
    pub fn in_theorem_range(&self) -> bool {
        self.codimension() > 2
    }

    pub fn color(&self, i: usize) -> Result<i64> {
        match self.m.get(i) {
            Some(&mi) => Ok(mi),
            None => invalid(format!("color {} out of range for r = {}", i + 1, self.r())),
        }
    }

    pub fn degree_of(&self, kind: OrientationKind, desc: Description) -> Result<i64> {
        Ok(match kind {
            OrientationKind::NonColoredEdge => self.d - 1,
            OrientationKind::ColoredEdge(i) => match desc {
                Description::First => self.color(i)? - 1,
                Description::Second => {
                    self.color(i)?;
                    -1
                }
            },
            OrientationKind::InternalVertex => -self.d,
            OrientationKind::ExternalVertex(i) | OrientationKind::ColoredComponent(i) => {
                -self.color(i)?
            }
        })
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.m.iter().map(|x| x.to_string()).collect();
        write!(f, "m=({}) d={}", ms.join(","), self.d)
    }
}

/// One element of an orientation set, identified by an opaque id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientationElement {
    pub kind: OrientationKind,
    pub id: usize,
}

/// A total order on an orientation set together with edge directions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationData {
    pub order: Vec<OrientationElement>,
    /// `(source, target)` for every directed edge, indexed by edge id.
    pub directions: Vec<(usize, usize)>,
}

impl OrientationData {
    /// Reorders to `new_order` and reports the Koszul sign of the rewrite.
    pub fn reorder(
        &mut self,
        new_order: Vec<OrientationElement>,
        params: &Params,
        desc: Description,
    ) -> Result<Sign> {
        if new_order.len() != self.order.len() {
            return invalid("reordering must keep every orientation element");
        }
        let mut perm = Vec::with_capacity(new_order.len());
        for el in &new_order {
            match self.order.iter().position(|o| o == el) {
                Some(p) => perm.push(p),
                None => return invalid(format!("unknown orientation element {el:?}")),
            }
        }
        let degrees = self
            .order
            .iter()
            .map(|el| params.degree_of(el.kind, desc))
            .collect::<Result<Vec<_>>>()?;
        let sign = koszul_sign(&perm, &degrees)?;
        self.order = new_order;
        Ok(sign)
    }
}

/// Koszul sign of rearranging a list of graded elements.
///
/// `perm[new_position] = old_position`. The result is `(-1)^k` where `k`
/// counts inversions between pairs of odd elements.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> Result<Sign> {
    if perm.len() != degrees.len() {
        return invalid(format!(
            "permutation of length {} applied to {} degrees",
            perm.len(),
            degrees.len()
        ));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return invalid("not a permutation");
        }
        seen[p] = true;
    }
    let odd: Vec<bool> = perm.iter().map(|&p| degrees[p].rem_euclid(2) == 1).collect();
    let mut k = 0usize;
    for a in 0..perm.len() {
        if !odd[a] {
            continue;
        }
        for b in a + 1..perm.len() {
            if odd[b] && perm[a] > perm[b] {
                k += 1;
            }
        }
    }
    Ok(Sign::from_odd(k % 2 == 1))
}

/// Stable sort of graded items by key, returning the Koszul sign of the sort.
/// `parity(item)` is true for odd elements.
pub fn sort_with_sign<T, K: Ord>(
    items: &mut [T],
    key: impl Fn(&T) -> K,
    parity: impl Fn(&T) -> bool,
) -> Sign {
    let mut sign = Sign::Plus;
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && key(&items[j - 1]) > key(&items[j]) {
            if parity(&items[j - 1]) && parity(&items[j]) {
                sign = -sign;
            }
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    sign
}

/// Sign picked up when an edge is reversed.
pub fn edge_flip_sign(kind: OrientationKind, params: &Params) -> Result<Sign> {
    match kind {
        OrientationKind::NonColoredEdge => Ok(Sign::pow(params.d)),
        OrientationKind::ColoredEdge(i) => Ok(Sign::pow(params.color(i)?)),
        other => invalid(format!("{other:?} is not an edge")),
    }
}
