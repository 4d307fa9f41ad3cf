use std::fmt;

/// A coordinate on the half-integer grid, stored as twice its value so odd
/// half-integers such as `-3/2` stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    /// `value + 1/2`.
    pub const fn above(value: i64) -> Self {
        HalfInt {
            twice: 2 * value + 1,
        }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_odd_half(self) -> bool {
        self.twice % 2 != 0
    }

    /// Largest integer strictly below an odd half-integer (`î - 1/2`).
    pub const fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_as_fraction() {
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::above(0).to_string(), "1/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
    }

    #[test]
    fn floor_of_negative_half() {
        assert_eq!(HalfInt::from_twice(-1).floor(), -1);
        assert_eq!(HalfInt::from_twice(3).floor(), 1);
        assert!(HalfInt::from_twice(-1).is_odd_half());
    }
}
