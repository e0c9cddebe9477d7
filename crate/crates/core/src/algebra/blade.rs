use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Metric signature of a real Clifford algebra with at most eight generators.
///
/// Bit `i` of `negative` is set when generator `i` squares to `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    dim: u8,
    negative: u8,
}

impl Signature {
    pub const MAX_GENERATORS: usize = 8;

    /// Cl(1,3): γ₀² = +1, γ₁² = γ₂² = γ₃² = -1.
    pub const SPACETIME: Signature = Signature { dim: 4, negative: 0b1110 };

    /// Cl(3,0).
    pub const EUCLIDEAN3: Signature = Signature { dim: 3, negative: 0 };

    /// First `p` generators square to `+1`, the following `q` to `-1`.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > Self::MAX_GENERATORS {
            return Err(Error::InvalidSignature(format!(
                "p + q = {} exceeds {}",
                p + q,
                Self::MAX_GENERATORS
            )));
        }
        let negative = (((1u16 << q) - 1) << p) as u8;
        Ok(Signature { dim: (p + q) as u8, negative })
    }

    pub fn from_diag(diag: &[i8]) -> Result<Self> {
        if diag.len() > Self::MAX_GENERATORS {
            return Err(Error::InvalidSignature(format!("{} generators", diag.len())));
        }
        let mut negative = 0u8;
        for (i, &d) in diag.iter().enumerate() {
            match d {
                1 => {}
                -1 => negative |= 1 << i,
                other => {
                    return Err(Error::InvalidSignature(format!("diagonal entry {other}")))
                }
            }
        }
        Ok(Signature { dim: diag.len() as u8, negative })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn p(&self) -> usize {
        self.dim() - self.q()
    }

    pub fn q(&self) -> usize {
        self.negative.count_ones() as usize
    }

    /// `+1` or `-1`, the square of generator `i`.
    pub fn square(&self, i: usize) -> i8 {
        if self.negative >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn diag(&self) -> Vec<i8> {
        (0..self.dim()).map(|i| self.square(i)).collect()
    }

    pub fn pseudoscalar(&self) -> Blade {
        Blade(((1u16 << self.dim) - 1) as u8)
    }

    pub fn contains(&self, blade: Blade) -> bool {
        (blade.0 as u16) >> self.dim == 0
    }

    pub fn is_spacetime(&self) -> bool {
        *self == Self::SPACETIME
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Signature::new(self.p(), self.q()).as_ref() == Ok(self) {
            write!(f, "Cl({},{})", self.p(), self.q())
        } else {
            let d: Vec<&str> = self.diag().iter().map(|&s| if s > 0 { "+" } else { "-" }).collect();
            write!(f, "Cl[{}]", d.join(""))
        }
    }
}

/// Basis monomial: the product of the generators whose bits are set, in
/// ascending index order. Ordered by `(grade, mask)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u8) -> Self {
        Blade(mask)
    }

    pub fn generator(i: usize) -> Self {
        Blade(1 << i)
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..8).filter(move |&i| self.contains(i))
    }

    pub fn is_even(&self) -> bool {
        self.grade().is_multiple_of(2)
    }

    /// Sign `(-1)^{k(k-1)/2}` picked up under reversion.
    pub fn reverse_negates(&self) -> bool {
        let k = self.grade();
        (k * k.saturating_sub(1) / 2) % 2 == 1
    }

    /// Geometric product of two basis blades: `(negated, blade)`.
    pub fn product(self, rhs: Blade, sig: &Signature) -> (bool, Blade) {
        let (a, b) = (self.0, rhs.0);
        // transpositions needed to move each generator of `b` past the larger
        // generators of `a`
        let mut swaps = 0u32;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros();
            swaps += (a as u16 >> (j + 1)).count_ones();
            rest &= rest - 1;
        }
        let mut negated = swaps % 2 == 1;
        // contract repeated generators with the metric
        if (a & b & sig.negative).count_ones() % 2 == 1 {
            negated = !negated;
        }
        (negated, Blade(a ^ b))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.grade(), self.0).cmp(&(other.grade(), other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
