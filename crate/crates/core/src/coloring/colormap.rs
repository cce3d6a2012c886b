use super::{Color, ColoringError};
use serde::{Serialize, Serializer};

/// A bijection on `[1, k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorMap {
    // image[c] for c in 1..=k; image[0] unused
    image: Vec<Color>,
}

impl ColorMap {
    pub fn identity(k: u8) -> Self {
        ColorMap {
            image: (0..=k).collect(),
        }
    }

    /// Exchanges `a` and `b`.
    pub fn transposition(k: u8, a: Color, b: Color) -> Self {
        let mut m = Self::identity(k);
        m.image.swap(a as usize, b as usize);
        m
    }

    /// From the images of `1..=k` in order.
    pub fn from_images(images: &[Color]) -> Result<Self, ColoringError> {
        let k = images.len();
        let mut seen = vec![false; k + 1];
        for &c in images {
            if c == 0 || c as usize > k || seen[c as usize] {
                return Err(ColoringError::Precondition("not a bijection".into()));
            }
            seen[c as usize] = true;
        }
        let mut image = vec![0];
        image.extend_from_slice(images);
        Ok(ColorMap { image })
    }

    pub fn k(&self) -> u8 {
        (self.image.len() - 1) as u8
    }

    #[inline]
    pub fn apply(&self, c: Color) -> Color {
        self.image[c as usize]
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for c in 1..self.image.len() {
            image[self.image[c] as usize] = c as Color;
        }
        ColorMap { image }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &ColorMap) -> Self {
        let image = (0..first.image.len())
            .map(|c| if c == 0 { 0 } else { self.apply(first.apply(c as Color)) })
            .collect();
        ColorMap { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &c)| i == c as usize)
    }

    /// Non-fixed points as `(from, to)`.
    pub fn moved(&self) -> Vec<(Color, Color)> {
        (1..self.image.len())
            .filter(|&c| self.image[c] as usize != c)
            .map(|c| (c as Color, self.image[c]))
            .collect()
    }
}

impl Serialize for ColorMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.moved().into_iter().map(|(a, b)| [a, b]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        let t = ColorMap::transposition(4, 1, 3);
        assert_eq!(t.apply(1), 3);
        assert_eq!(t.after(&t), ColorMap::identity(4));
        let m = ColorMap::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(m.inverse().after(&m), ColorMap::identity(3));
        assert_eq!(m.moved(), vec![(1, 2), (2, 3), (3, 1)]);
        assert!(ColorMap::from_images(&[1, 1]).is_err());
    }
}
