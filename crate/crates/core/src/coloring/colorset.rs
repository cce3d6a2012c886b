use serde::{Serialize, Serializer};
use std::fmt;

/// Colours are 1-based.
pub type Color = u8;

/// Largest supported palette.
pub const MAX_COLORS: usize = 64;

/// Subset of `[1, 64]`; colour `c` lives in bit `c - 1`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `[1, k]`.
    pub fn full(k: u8) -> Self {
        if k as usize >= MAX_COLORS {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn single(c: Color) -> Self {
        ColorSet(1u64 << (c - 1))
    }

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        c >= 1 && (c as usize) <= MAX_COLORS && self.0 >> (c - 1) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, c: Color) {
        self.0 |= 1u64 << (c - 1);
    }

    #[inline]
    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1u64 << (c - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest colour, if any.
    pub fn first(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color + 1)
    }

    /// The colour of a singleton set.
    pub fn only(self) -> Option<Color> {
        (self.len() == 1).then(|| self.first().unwrap())
    }

    pub fn union(self, o: Self) -> Self {
        ColorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ColorSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        ColorSet(self.0 & !o.0)
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// Ascending iteration.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as Color + 1;
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
