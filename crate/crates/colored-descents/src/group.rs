//! Colored permutations: elements of the wreath product of a cyclic color
//! group of order `r` with the symmetric group on `n` letters.
//!
//! The canonical stored form is window notation: position `i` holds a value
//! from `1..=n` together with a color from `0..r`. The pair form (a color
//! word plus an uncolored permutation) exists only at multiplication
//! boundaries.
//!
//! Conventions fixed here, once:
//! - in the pair form, the color word is indexed by *value*: entry `v - 1`
//!   is the color carried by the letter `v`;
//! - `a.multiply(b)` composes right-to-left, i.e. applies `b` first, like
//!   ordinary function composition.
//!
//! Both choices are validated by the symbol-permutation oracle in the tests:
//! an element acts on the `r * n` colored symbols, and multiplication must
//! agree with composition of those actions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("the number of colors r must be at least 1")]
    InvalidColorCount,

    #[error("values do not form a permutation of 1..={n}")]
    NotAPermutation { n: u32 },

    #[error("color {color} out of range for r={r}")]
    ColorOutOfRange { color: u32, r: u32 },

    #[error("parameter mismatch: (r={r_left}, n={n_left}) vs (r={r_right}, n={n_right})")]
    ParamsMismatch {
        r_left: u32,
        n_left: u32,
        r_right: u32,
        n_right: u32,
    },

    #[error("negation is the color swap of signed permutations; it requires r=2, got r={r}")]
    NegationRequiresSigned { r: u32 },

    #[error("word of length {n} is too short; need at least {need} letters")]
    TooShort { n: u32, need: u32 },

    #[error("index {index} out of range for a group of order {order}")]
    RankOutOfRange { index: BigUint, order: BigUint },

    #[error("cannot parse colored permutation: {0}")]
    Parse(String),
}

/// The pair `(r, n)` naming one colored permutation group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupParams {
    r: u32,
    n: u32,
}

impl GroupParams {
    pub fn new(r: u32, n: u32) -> Result<Self, GroupError> {
        if r == 0 {
            return Err(GroupError::InvalidColorCount);
        }
        Ok(GroupParams { r, n })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Group order `r^n * n!` as an exact big integer.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::from(self.r).pow(self.n);
        for t in 2..=u64::from(self.n) {
            acc *= BigUint::from(t);
        }
        acc
    }

    pub fn identity(&self) -> ColoredPermutation {
        ColoredPermutation {
            params: *self,
            letters: (1..=self.n)
                .map(|value| ColoredLetter { value, color: 0 })
                .collect(),
        }
    }

    /// Every element exactly once, in rank order.
    pub fn iter_elements(&self) -> ElementIter {
        ElementIter {
            params: *self,
            values: (1..=self.n).collect(),
            colors: vec![0; self.n as usize],
            exhausted: false,
        }
    }

    /// `count` consecutive elements starting at rank `start`. Ranges with
    /// disjoint index intervals partition the group, which is what the
    /// parallel brute-force sweep relies on.
    pub fn iter_range(&self, start: &BigUint, count: u64) -> Result<RangeIter, GroupError> {
        let first = self.unrank(start)?;
        let (values, colors) = first.into_parts();
        Ok(RangeIter {
            params: *self,
            values,
            colors,
            remaining: count,
        })
    }

    /// Inverse of [`ColoredPermutation::rank`]: the element at the given
    /// index in the mixed-radix scheme (permutation Lehmer code as the high
    /// digits, the color word read as a base-r numeral as the low digits).
    pub fn unrank(&self, index: &BigUint) -> Result<ColoredPermutation, GroupError> {
        let order = self.order();
        if *index >= order {
            return Err(GroupError::RankOutOfRange {
                index: index.clone(),
                order,
            });
        }
        let n = self.n as usize;
        let r_pow = BigUint::from(self.r).pow(self.n);
        let (perm_rank, color_num) = index.div_rem(&r_pow);

        let mut colors = vec![0u32; n];
        let r_big = BigUint::from(self.r);
        let mut rem = color_num;
        for slot in colors.iter_mut().rev() {
            let (next, digit) = rem.div_rem(&r_big);
            *slot = digit.to_u32().expect("digit below r");
            rem = next;
        }

        // Lehmer decode: digit i counts how many unused values are skipped.
        let mut digits = vec![0usize; n];
        let mut rem = perm_rank;
        for (i, digit) in digits.iter_mut().enumerate() {
            let f = factorial_biguint((n - 1 - i) as u64);
            let (d, next) = rem.div_rem(&f);
            *digit = d.to_usize().expect("Lehmer digit fits usize");
            rem = next;
        }
        let mut available: Vec<u32> = (1..=self.n).collect();
        let values: Vec<u32> = digits.iter().map(|&d| available.remove(d)).collect();

        ColoredPermutation::from_parts(*self, &values, &colors)
    }
}

fn factorial_biguint(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for t in 2..=n {
        acc *= BigUint::from(t);
    }
    acc
}

/// One letter of a window: a value in `1..=n` carrying a color in `0..r`.
///
/// The ordering is the colored order: higher color classes come first, and
/// within a color class letters compare by value. So with two colors the
/// barred letters sit below every plain letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ColoredLetter {
    pub value: u32,
    pub color: u32,
}

impl Ord for ColoredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .color
            .cmp(&self.color)
            .then_with(|| self.value.cmp(&other.value))
    }
}

impl PartialOrd for ColoredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Pair form of an element: an uncolored permutation plus a color word
/// indexed by value. Round-trips with window notation exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZTauForm {
    /// `colors_by_value[v - 1]` is the color of the letter `v`.
    pub colors_by_value: Vec<u32>,
    /// One-line notation: `perm[i]` is the value in window position `i`.
    pub perm: Vec<u32>,
}

/// An element of the colored permutation group in window notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredPermutation {
    params: GroupParams,
    letters: Vec<ColoredLetter>,
}

impl ColoredPermutation {
    pub fn new(params: GroupParams, letters: Vec<ColoredLetter>) -> Result<Self, GroupError> {
        let n = params.n;
        if letters.len() != n as usize {
            return Err(GroupError::NotAPermutation { n });
        }
        let mut seen = vec![false; n as usize];
        for letter in &letters {
            if letter.value == 0 || letter.value > n || seen[(letter.value - 1) as usize] {
                return Err(GroupError::NotAPermutation { n });
            }
            seen[(letter.value - 1) as usize] = true;
            if letter.color >= params.r {
                return Err(GroupError::ColorOutOfRange {
                    color: letter.color,
                    r: params.r,
                });
            }
        }
        Ok(ColoredPermutation { params, letters })
    }

    pub fn from_parts(
        params: GroupParams,
        values: &[u32],
        colors: &[u32],
    ) -> Result<Self, GroupError> {
        if values.len() != colors.len() {
            return Err(GroupError::NotAPermutation { n: params.n });
        }
        Self::new(
            params,
            values
                .iter()
                .zip(colors)
                .map(|(&value, &color)| ColoredLetter { value, color })
                .collect(),
        )
    }

    fn from_parts_unchecked(params: GroupParams, values: Vec<u32>, colors: Vec<u32>) -> Self {
        ColoredPermutation {
            params,
            letters: values
                .into_iter()
                .zip(colors)
                .map(|(value, color)| ColoredLetter { value, color })
                .collect(),
        }
    }

    fn into_parts(self) -> (Vec<u32>, Vec<u32>) {
        let mut values = Vec::with_capacity(self.letters.len());
        let mut colors = Vec::with_capacity(self.letters.len());
        for letter in self.letters {
            values.push(letter.value);
            colors.push(letter.color);
        }
        (values, colors)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn n(&self) -> u32 {
        self.params.n
    }

    pub fn r(&self) -> u32 {
        self.params.r
    }

    pub fn letters(&self) -> &[ColoredLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters
            .iter()
            .enumerate()
            .all(|(i, letter)| letter.value == i as u32 + 1 && letter.color == 0)
    }

    pub fn to_ztau(&self) -> ZTauForm {
        let n = self.letters.len();
        let mut colors_by_value = vec![0u32; n];
        let mut perm = Vec::with_capacity(n);
        for letter in &self.letters {
            colors_by_value[(letter.value - 1) as usize] = letter.color;
            perm.push(letter.value);
        }
        ZTauForm {
            colors_by_value,
            perm,
        }
    }

    pub fn from_ztau(params: GroupParams, form: &ZTauForm) -> Result<Self, GroupError> {
        if form.colors_by_value.len() != params.n as usize {
            return Err(GroupError::NotAPermutation { n: params.n });
        }
        let letters = form
            .perm
            .iter()
            .map(|&value| {
                if value == 0 || value > params.n {
                    return Err(GroupError::NotAPermutation { n: params.n });
                }
                Ok(ColoredLetter {
                    value,
                    color: form.colors_by_value[(value - 1) as usize],
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(params, letters)
    }

    /// Group multiplication, applying `rhs` first: the product sends a
    /// symbol wherever `rhs` sends it and then applies `self`, colors
    /// adding modulo r along the way.
    pub fn multiply(&self, rhs: &ColoredPermutation) -> Result<ColoredPermutation, GroupError> {
        if self.params != rhs.params {
            return Err(GroupError::ParamsMismatch {
                r_left: self.params.r,
                n_left: self.params.n,
                r_right: rhs.params.r,
                n_right: rhs.params.n,
            });
        }
        let n = self.params.n as usize;
        let r = self.params.r;
        let a = self.to_ztau();
        let b = rhs.to_ztau();

        let mut a_inv = vec![0u32; n];
        for (i, &v) in a.perm.iter().enumerate() {
            a_inv[(v - 1) as usize] = i as u32 + 1;
        }

        // color word of the product: z''_v = z_v + z'_{tau^{-1}(v)} (mod r)
        let colors_by_value: Vec<u32> = (0..n)
            .map(|v| {
                let pre = a_inv[v];
                (a.colors_by_value[v] + b.colors_by_value[(pre - 1) as usize]) % r
            })
            .collect();
        let perm: Vec<u32> = (0..n)
            .map(|i| a.perm[(b.perm[i] - 1) as usize])
            .collect();

        Self::from_ztau(
            self.params,
            &ZTauForm {
                colors_by_value,
                perm,
            },
        )
    }

    pub fn inverse(&self) -> ColoredPermutation {
        let n = self.letters.len();
        let r = self.params.r;
        let mut letters = vec![ColoredLetter { value: 0, color: 0 }; n];
        for (i, letter) in self.letters.iter().enumerate() {
            letters[(letter.value - 1) as usize] = ColoredLetter {
                value: i as u32 + 1,
                color: (r - letter.color) % r,
            };
        }
        ColoredPermutation {
            params: self.params,
            letters,
        }
    }

    /// The sign-swap bijection of signed permutations: every color toggles
    /// between 0 and 1, values unchanged. Defined only for r = 2.
    pub fn negate(&self) -> Result<ColoredPermutation, GroupError> {
        if self.params.r != 2 {
            return Err(GroupError::NegationRequiresSigned { r: self.params.r });
        }
        Ok(ColoredPermutation {
            params: self.params,
            letters: self
                .letters
                .iter()
                .map(|letter| ColoredLetter {
                    value: letter.value,
                    color: 1 - letter.color,
                })
                .collect(),
        })
    }

    /// Increment every color by one modulo r, values unchanged. Applying it
    /// r times is the identity.
    pub fn rotate_colors(&self) -> ColoredPermutation {
        let r = self.params.r;
        ColoredPermutation {
            params: self.params,
            letters: self
                .letters
                .iter()
                .map(|letter| ColoredLetter {
                    value: letter.value,
                    color: (letter.color + 1) % r,
                })
                .collect(),
        }
    }

    /// Remove the first letter and relabel the remaining values
    /// order-preservingly onto `1..=n-1`; each color stays with its letter.
    pub fn drop_first(&self) -> Result<ColoredPermutation, GroupError> {
        if self.letters.is_empty() {
            return Err(GroupError::TooShort {
                n: self.params.n,
                need: 1,
            });
        }
        let removed = self.letters[0].value;
        let params = GroupParams::new(self.params.r, self.params.n - 1)?;
        let letters = self.letters[1..]
            .iter()
            .map(|letter| ColoredLetter {
                value: letter.value - u32::from(letter.value > removed),
                color: letter.color,
            })
            .collect();
        Ok(ColoredPermutation { params, letters })
    }

    /// Remove the first two letters and relabel onto `1..=n-2`.
    pub fn drop_first_two(&self) -> Result<ColoredPermutation, GroupError> {
        if self.letters.len() < 2 {
            return Err(GroupError::TooShort {
                n: self.params.n,
                need: 2,
            });
        }
        let lo = self.letters[0].value.min(self.letters[1].value);
        let hi = self.letters[0].value.max(self.letters[1].value);
        let params = GroupParams::new(self.params.r, self.params.n - 2)?;
        let letters = self.letters[2..]
            .iter()
            .map(|letter| ColoredLetter {
                value: letter.value - u32::from(letter.value > lo) - u32::from(letter.value > hi),
                color: letter.color,
            })
            .collect();
        Ok(ColoredPermutation { params, letters })
    }

    /// Mixed-radix index of this element: Lehmer code of the values as the
    /// high digits, the color word read as a base-r numeral as the low
    /// digits. Bijective with `0..order`.
    pub fn rank(&self) -> BigUint {
        let n = self.letters.len();
        let mut perm_rank = BigUint::zero();
        for i in 0..n {
            let smaller_after = self.letters[i + 1..]
                .iter()
                .filter(|l| l.value < self.letters[i].value)
                .count();
            perm_rank = perm_rank * BigUint::from((n - i) as u64) + BigUint::from(smaller_after);
        }
        let r_big = BigUint::from(self.params.r);
        let mut color_num = BigUint::zero();
        for letter in &self.letters {
            color_num = color_num * &r_big + BigUint::from(letter.color);
        }
        perm_rank * r_big.pow(self.params.n) + color_num
    }

    /// Parse the space-separated `v[c]` token form; with two colors, bare
    /// `v` and `-v` tokens are accepted as colors 0 and 1.
    pub fn parse(params: GroupParams, input: &str) -> Result<Self, GroupError> {
        let mut letters = Vec::with_capacity(params.n as usize);
        for token in input.split_whitespace() {
            let letter = if let Some(open) = token.find('[') {
                let close = token
                    .strip_suffix(']')
                    .ok_or_else(|| GroupError::Parse(format!("missing ']' in `{token}`")))?;
                let value: u32 = close[..open]
                    .parse()
                    .map_err(|_| GroupError::Parse(format!("bad value in `{token}`")))?;
                let color: u32 = close[open + 1..]
                    .parse()
                    .map_err(|_| GroupError::Parse(format!("bad color in `{token}`")))?;
                ColoredLetter { value, color }
            } else if params.r == 2 {
                let (color, digits) = match token.strip_prefix('-') {
                    Some(rest) => (1, rest),
                    None => (0, token),
                };
                let value: u32 = digits
                    .parse()
                    .map_err(|_| GroupError::Parse(format!("bad value in `{token}`")))?;
                ColoredLetter { value, color }
            } else {
                return Err(GroupError::Parse(format!(
                    "token `{token}` needs the v[c] form when r != 2"
                )));
            };
            letters.push(letter);
        }
        Self::new(params, letters)
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}[{}]", letter.value, letter.color)?;
            first = false;
        }
        Ok(())
    }
}

fn next_permutation(values: &mut [u32]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = values.len() - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Advance (values, colors) to the next element in rank order. The color
/// word is the fast odometer; when it wraps, the permutation steps.
fn advance(values: &mut [u32], colors: &mut [u32], r: u32) -> bool {
    for slot in colors.iter_mut().rev() {
        *slot += 1;
        if *slot < r {
            return true;
        }
        *slot = 0;
    }
    next_permutation(values)
}

/// Streams the whole group in rank order.
pub struct ElementIter {
    params: GroupParams,
    values: Vec<u32>,
    colors: Vec<u32>,
    exhausted: bool,
}

impl Iterator for ElementIter {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.exhausted {
            return None;
        }
        let item = ColoredPermutation::from_parts_unchecked(
            self.params,
            self.values.clone(),
            self.colors.clone(),
        );
        if !advance(&mut self.values, &mut self.colors, self.params.r) {
            self.exhausted = true;
        }
        Some(item)
    }
}

/// Streams a contiguous rank range; used to split brute-force sweeps
/// across workers.
pub struct RangeIter {
    params: GroupParams,
    values: Vec<u32>,
    colors: Vec<u32>,
    remaining: u64,
}

impl Iterator for RangeIter {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let item = ColoredPermutation::from_parts_unchecked(
            self.params,
            self.values.clone(),
            self.colors.clone(),
        );
        if self.remaining > 0 && !advance(&mut self.values, &mut self.colors, self.params.r) {
            self.remaining = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, n: u32) -> GroupParams {
        GroupParams::new(r, n).unwrap()
    }

    fn element(r: u32, n: u32, s: &str) -> ColoredPermutation {
        ColoredPermutation::parse(params(r, n), s).unwrap()
    }

    #[test]
    fn colored_order_examples() {
        let less = |a: (u32, u32), b: (u32, u32)| {
            ColoredLetter {
                value: a.0,
                color: a.1,
            }
            .cmp(&ColoredLetter {
                value: b.0,
                color: b.1,
            })
        };
        assert_eq!(less((1, 2), (2, 2)), Ordering::Less);
        assert_eq!(less((2, 2), (6, 1)), Ordering::Less);
        assert_eq!(less((3, 1), (3, 1)), Ordering::Equal);
        assert_eq!(less((6, 1), (2, 2)), Ordering::Greater);
    }

    #[test]
    fn order_counts() {
        assert_eq!(params(2, 2).order(), BigUint::from(8u32));
        assert_eq!(params(3, 2).order(), BigUint::from(18u32));
        assert_eq!(params(1, 0).order(), BigUint::from(1u32));
        assert_eq!(params(4, 6).order(), BigUint::from(2_949_120u32));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(params(2, 2).iter_elements().count(), 8);
        assert_eq!(params(3, 2).iter_elements().count(), 18);
        assert_eq!(params(1, 0).iter_elements().count(), 1);
    }

    #[test]
    fn identity_laws() {
        for r in 1..=3 {
            for n in 0..=3 {
                let p = params(r, n);
                let e = p.identity();
                for x in p.iter_elements() {
                    assert_eq!(e.multiply(&x).unwrap(), x);
                    assert_eq!(x.multiply(&e).unwrap(), x);
                    let inv = x.inverse();
                    assert!(x.multiply(&inv).unwrap().is_identity());
                    assert!(inv.multiply(&x).unwrap().is_identity());
                    assert_eq!(inv.inverse(), x);
                }
            }
        }
    }

    #[test]
    fn params_mismatch_rejected() {
        let a = params(2, 2).identity();
        let b = params(3, 2).identity();
        assert!(matches!(
            a.multiply(&b),
            Err(GroupError::ParamsMismatch { .. })
        ));
    }

    #[test]
    fn negate_swaps_all_signs() {
        let x = element(2, 8, "1 4 -3 7 5 -6 -2 8");
        let y = x.negate().unwrap();
        assert_eq!(y, element(2, 8, "-1 -4 3 -7 -5 6 2 -8"));
        assert_eq!(y.negate().unwrap(), x);
        assert_eq!(
            params(2, 3).identity().negate().unwrap(),
            element(2, 3, "-1 -2 -3")
        );
        assert!(matches!(
            params(3, 1).identity().negate(),
            Err(GroupError::NegationRequiresSigned { r: 3 })
        ));
    }

    #[test]
    fn rotate_colors_cycles() {
        let x = element(3, 2, "2[0] 1[0]");
        let once = x.rotate_colors();
        assert_eq!(once, element(3, 2, "2[1] 1[1]"));
        assert_eq!(once.rotate_colors().rotate_colors(), x);
    }

    #[test]
    fn drop_first_relabels() {
        // removing the largest first letter leaves the rest unchanged
        let x = element(3, 6, "6[1] 2[2] 4[0] 5[1] 3[2] 1[2]");
        assert_eq!(x.drop_first().unwrap(), element(3, 5, "2[2] 4[0] 5[1] 3[2] 1[2]"));
        // removing a middle letter shifts the larger values down
        let y = element(2, 4, "2[0] 4[1] 1[0] 3[1]");
        assert_eq!(y.drop_first().unwrap(), element(2, 3, "3[1] 1[0] 2[1]"));
        let e = params(4, 5).identity();
        assert_eq!(e.drop_first().unwrap(), params(4, 4).identity());
        assert!(params(2, 0).identity().drop_first().is_err());
    }

    #[test]
    fn drop_first_two_is_double_drop() {
        let p = params(3, 4);
        for x in p.iter_elements() {
            assert_eq!(
                x.drop_first_two().unwrap(),
                x.drop_first().unwrap().drop_first().unwrap()
            );
        }
        assert!(params(2, 1).identity().drop_first_two().is_err());
    }

    #[test]
    fn ztau_round_trip() {
        for r in 1..=3 {
            for n in 0..=4 {
                let p = params(r, n);
                for x in p.iter_elements() {
                    let form = x.to_ztau();
                    assert_eq!(ColoredPermutation::from_ztau(p, &form).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn rank_unrank_round_trip() {
        for (r, n) in [(1, 4), (2, 3), (3, 3), (4, 2)] {
            let p = params(r, n);
            for (i, x) in p.iter_elements().enumerate() {
                assert_eq!(x.rank(), BigUint::from(i));
                assert_eq!(p.unrank(&BigUint::from(i)).unwrap(), x);
            }
        }
    }

    #[test]
    fn unrank_bounds() {
        let p = params(2, 2);
        assert!(p.unrank(&BigUint::from(0u32)).unwrap().is_identity());
        assert!(matches!(
            p.unrank(&p.order()),
            Err(GroupError::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_and_display() {
        let x = element(3, 3, "3[2] 1[0] 2[1]");
        assert_eq!(x.to_string(), "3[2] 1[0] 2[1]");
        assert_eq!(element(2, 3, "2 -3 1"), element(2, 3, "2[0] 3[1] 1[0]"));
        assert!(ColoredPermutation::parse(params(3, 2), "-1 2").is_err());
        assert!(ColoredPermutation::parse(params(2, 2), "1 1").is_err());
        assert!(ColoredPermutation::parse(params(2, 2), "1[2] 2[0]").is_err());
        assert!(ColoredPermutation::parse(params(2, 0), "").unwrap().is_identity());
    }
}
