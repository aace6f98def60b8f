//! Descent statistics on colored permutations, and the block/composition
//! decompositions the counting arguments run on.
//!
//! A descent is a position whose letter exceeds its right neighbor in the
//! colored order. Because lower colors form higher classes, a descent's
//! color pair `(c, d)` always satisfies `c <= d`; for `c < d` the adjacency
//! alone forces the descent.

use crate::group::ColoredPermutation;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("statistic {stat} is not defined for r={r}")]
    InvalidStatistic { stat: String, r: u32 },

    #[error("the empty word has no block decomposition")]
    EmptyWord,

    #[error("composition parts sum to {got}, expected {expected}")]
    SumMismatch { got: u32, expected: u32 },
}

/// Which descents to count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DescentStatistic {
    /// Both letters color 0 (signed permutations: both positive). r = 2 only.
    Pdes,
    /// Both letters color 1 (both negative). r = 2 only.
    Ndes,
    /// Color 0 then color 1 (positive then negative). r = 2 only.
    Pndes,
    /// Left letter colored `c`, right letter colored `d`, with `c < d`.
    DesCd { c: u32, d: u32 },
    /// Both letters colored `c`.
    DesCc { c: u32 },
}

impl DescentStatistic {
    pub fn validate(&self, r: u32) -> Result<(), StatsError> {
        let ok = match *self {
            DescentStatistic::Pdes | DescentStatistic::Ndes | DescentStatistic::Pndes => r == 2,
            DescentStatistic::DesCd { c, d } => r >= 2 && c < d && d < r,
            DescentStatistic::DesCc { c } => c < r,
        };
        if ok {
            Ok(())
        } else {
            Err(StatsError::InvalidStatistic {
                stat: self.to_string(),
                r,
            })
        }
    }

    /// The color-pair form of a signed-permutation statistic: pdes, ndes and
    /// pn-descents are the (0,0)-, (1,1)- and (0,1)-descents of r = 2.
    pub fn canonical(&self) -> DescentStatistic {
        match *self {
            DescentStatistic::Pdes => DescentStatistic::DesCc { c: 0 },
            DescentStatistic::Ndes => DescentStatistic::DesCc { c: 1 },
            DescentStatistic::Pndes => DescentStatistic::DesCd { c: 0, d: 1 },
            other => other,
        }
    }

    /// The bare statistic name used in CLI flags and JSON output.
    pub fn kind_name(&self) -> &'static str {
        match self {
            DescentStatistic::Pdes => "pdes",
            DescentStatistic::Ndes => "ndes",
            DescentStatistic::Pndes => "pndes",
            DescentStatistic::DesCd { .. } => "des-cd",
            DescentStatistic::DesCc { .. } => "des-cc",
        }
    }

    pub fn color_fields(&self) -> (Option<u32>, Option<u32>) {
        match *self {
            DescentStatistic::DesCd { c, d } => (Some(c), Some(d)),
            DescentStatistic::DesCc { c } => (Some(c), None),
            _ => (None, None),
        }
    }

    /// Build from the CLI flag triple (`--stat`, `--c`, `--d`).
    pub fn from_flags(kind: &str, c: Option<u32>, d: Option<u32>) -> Result<Self, String> {
        let stat = match kind {
            "pdes" => DescentStatistic::Pdes,
            "ndes" => DescentStatistic::Ndes,
            "pndes" => DescentStatistic::Pndes,
            "des-cd" => DescentStatistic::DesCd {
                c: c.ok_or("des-cd requires --c")?,
                d: d.ok_or("des-cd requires --d")?,
            },
            "des-cc" => DescentStatistic::DesCc {
                c: c.ok_or("des-cc requires --c")?,
            },
            other => return Err(format!("unknown statistic `{other}`")),
        };
        match stat {
            DescentStatistic::DesCd { .. } | DescentStatistic::DesCc { .. } => {}
            _ if c.is_some() || d.is_some() => {
                return Err(format!("--c/--d do not apply to {kind}"));
            }
            _ => {}
        }
        Ok(stat)
    }
}

impl fmt::Display for DescentStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DescentStatistic::DesCd { c, d } => write!(f, "des-cd({c},{d})"),
            DescentStatistic::DesCc { c } => write!(f, "des-cc({c})"),
            _ => write!(f, "{}", self.kind_name()),
        }
    }
}

/// Positions `i` (1-based, `1..n`) where the letter exceeds its right
/// neighbor in the colored order.
pub fn descent_set(x: &ColoredPermutation) -> Vec<usize> {
    let letters = x.letters();
    (1..letters.len())
        .filter(|&i| letters[i - 1].cmp(&letters[i]) == Ordering::Greater)
        .collect()
}

/// Number of descents whose color pair matches the statistic.
pub fn count(x: &ColoredPermutation, stat: &DescentStatistic) -> Result<u64, StatsError> {
    stat.validate(x.r())?;
    let (want_c, want_d) = match stat.canonical() {
        DescentStatistic::DesCd { c, d } => (c, d),
        DescentStatistic::DesCc { c } => (c, c),
        _ => unreachable!("canonical form is a color pair"),
    };
    let letters = x.letters();
    let mut total = 0;
    for i in 1..letters.len() {
        if letters[i - 1].color == want_c
            && letters[i].color == want_d
            && letters[i - 1].cmp(&letters[i]) == Ordering::Greater
        {
            total += 1;
        }
    }
    Ok(total)
}

/// A composition of `n` recording the block structure of a word with
/// respect to one reference color: maximal runs of letters whose color
/// equals the reference (colored blocks) alternate with maximal runs whose
/// color differs (other blocks).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredComposition {
    parts: Vec<u32>,
    first_colored: bool,
}

impl ColoredComposition {
    pub fn new(parts: Vec<u32>, first_colored: bool) -> Result<Self, StatsError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(StatsError::EmptyWord);
        }
        Ok(ColoredComposition {
            parts,
            first_colored,
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// True when the first run carries the reference color.
    pub fn first_colored(&self) -> bool {
        self.first_colored
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// The derived counts the composition-sum formula weighs each composition by.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BlockParams {
    /// Sum of the parts in even (1-based) places.
    pub even_place_sum: u32,
    /// How many letters carry the reference color.
    pub colored_count: u32,
    /// Number of runs carrying the reference color.
    pub colored_blocks: u32,
    /// Number of runs avoiding the reference color.
    pub other_blocks: u32,
    /// Number of transitions from a colored run to an other run.
    pub transitions: u32,
}

/// Block decomposition of a word with respect to the color `c`.
pub fn blocks(x: &ColoredPermutation, c: u32) -> Result<ColoredComposition, StatsError> {
    let letters = x.letters();
    if letters.is_empty() {
        return Err(StatsError::EmptyWord);
    }
    let first_colored = letters[0].color == c;
    let mut parts = Vec::new();
    let mut run_colored = first_colored;
    let mut run_len = 0u32;
    for letter in letters {
        let colored = letter.color == c;
        if colored == run_colored {
            run_len += 1;
        } else {
            parts.push(run_len);
            run_colored = colored;
            run_len = 1;
        }
    }
    parts.push(run_len);
    ColoredComposition::new(parts, first_colored)
}

/// Derived parameters of a colored composition of `n`.
pub fn block_params(mu: &ColoredComposition, n: u32) -> Result<BlockParams, StatsError> {
    let got = mu.total();
    if got != n {
        return Err(StatsError::SumMismatch { got, expected: n });
    }
    let even_place_sum: u32 = mu
        .parts()
        .iter()
        .skip(1)
        .step_by(2)
        .sum();
    let colored_count = if mu.first_colored() {
        n - even_place_sum
    } else {
        even_place_sum
    };
    let len = mu.parts().len() as u32;
    let colored_blocks = if len.is_multiple_of(2) {
        len / 2
    } else if mu.first_colored() {
        len.div_ceil(2)
    } else {
        (len - 1) / 2
    };
    // a colored run starts a transition unless it is the final run
    let transitions = if mu.first_colored() {
        len / 2
    } else {
        (len - 1) / 2
    };
    Ok(BlockParams {
        even_place_sum,
        colored_count,
        colored_blocks,
        other_blocks: len - colored_blocks,
        transitions,
    })
}

/// pn-descent count read off the sign-block structure instead of scanning
/// pairs: transitions from a positive block to a negative one. r = 2 only.
pub fn pndes_from_blocks(x: &ColoredPermutation) -> Result<u64, StatsError> {
    if x.r() != 2 {
        return Err(StatsError::InvalidStatistic {
            stat: DescentStatistic::Pndes.to_string(),
            r: x.r(),
        });
    }
    if x.n() == 0 {
        return Ok(0);
    }
    let mu = blocks(x, 0)?;
    let b = mu.parts().len() as u64;
    Ok(if b.is_multiple_of(2) {
        if mu.first_colored() {
            b / 2
        } else {
            b / 2 - 1
        }
    } else {
        (b - 1) / 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupParams;

    fn element(r: u32, n: u32, s: &str) -> ColoredPermutation {
        ColoredPermutation::parse(GroupParams::new(r, n).unwrap(), s).unwrap()
    }

    #[test]
    fn signed_example_statistics() {
        let x = element(2, 8, "1 4 -3 7 5 -6 -2 8");
        assert_eq!(descent_set(&x), vec![2, 4, 5, 6]);
        assert_eq!(count(&x, &DescentStatistic::Pdes).unwrap(), 1);
        assert_eq!(count(&x, &DescentStatistic::Ndes).unwrap(), 1);
        assert_eq!(count(&x, &DescentStatistic::Pndes).unwrap(), 2);
        // negation swaps positive and negative descents
        let y = x.negate().unwrap();
        assert_eq!(count(&y, &DescentStatistic::Pdes).unwrap(), 1);
        assert_eq!(count(&y, &DescentStatistic::Ndes).unwrap(), 1);
        assert_eq!(count(&y, &DescentStatistic::Pndes).unwrap(), 2);
    }

    #[test]
    fn colored_example_statistics() {
        let x = element(3, 6, "6[1] 2[2] 4[0] 5[1] 3[2] 1[2]");
        assert_eq!(count(&x, &DescentStatistic::DesCd { c: 1, d: 2 }).unwrap(), 2);
        assert_eq!(count(&x, &DescentStatistic::DesCd { c: 0, d: 1 }).unwrap(), 1);
        assert_eq!(count(&x, &DescentStatistic::DesCc { c: 2 }).unwrap(), 1);
        assert_eq!(count(&x, &DescentStatistic::DesCc { c: 0 }).unwrap(), 0);
        assert_eq!(descent_set(&x).len(), 4);
    }

    #[test]
    fn monotone_words() {
        let inc = element(2, 4, "1 2 3 4");
        assert!(descent_set(&inc).is_empty());
        let dec = element(2, 4, "4 3 2 1");
        assert_eq!(descent_set(&dec), vec![1, 2, 3]);
    }

    #[test]
    fn descents_partition_into_color_pairs() {
        for r in 1..=4 {
            for n in 0..=5 {
                let params = GroupParams::new(r, n).unwrap();
                for x in params.iter_elements() {
                    let mut by_pair = 0;
                    for c in 0..r {
                        by_pair += count(&x, &DescentStatistic::DesCc { c }).unwrap();
                        for d in c + 1..r {
                            by_pair += count(&x, &DescentStatistic::DesCd { c, d }).unwrap();
                        }
                    }
                    assert_eq!(by_pair as usize, descent_set(&x).len(), "x={x}");
                }
            }
        }
    }

    #[test]
    fn mixed_color_adjacency_is_always_a_descent() {
        // a letter colored c followed by a letter colored d > c descends
        // regardless of values, so the (c,d) count is a pure pattern count
        for r in 2..=4 {
            for n in 2..=5 {
                let params = GroupParams::new(r, n).unwrap();
                for x in params.iter_elements() {
                    for c in 0..r {
                        for d in c + 1..r {
                            let pattern = x
                                .letters()
                                .windows(2)
                                .filter(|w| w[0].color == c && w[1].color == d)
                                .count() as u64;
                            assert_eq!(
                                count(&x, &DescentStatistic::DesCd { c, d }).unwrap(),
                                pattern,
                                "x={x} c={c} d={d}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_round_trip_color_pattern() {
        for r in 1..=3 {
            for n in 1..=5 {
                let params = GroupParams::new(r, n).unwrap();
                for x in params.iter_elements() {
                    for c in 0..r {
                        let mu = blocks(&x, c).unwrap();
                        // expand runs back into the per-position pattern
                        let mut pattern = Vec::with_capacity(n as usize);
                        let mut colored = mu.first_colored();
                        for &part in mu.parts() {
                            pattern.extend(std::iter::repeat(colored).take(part as usize));
                            colored = !colored;
                        }
                        let actual: Vec<bool> =
                            x.letters().iter().map(|l| l.color == c).collect();
                        assert_eq!(pattern, actual, "x={x} c={c}");
                    }
                }
            }
        }
    }

    #[test]
    fn stat_validation() {
        assert!(DescentStatistic::Pdes.validate(2).is_ok());
        assert!(DescentStatistic::Pdes.validate(3).is_err());
        assert!(DescentStatistic::DesCd { c: 0, d: 1 }.validate(1).is_err());
        assert!(DescentStatistic::DesCd { c: 1, d: 1 }.validate(3).is_err());
        assert!(DescentStatistic::DesCd { c: 0, d: 2 }.validate(3).is_ok());
        assert!(DescentStatistic::DesCc { c: 2 }.validate(2).is_err());
        assert!(DescentStatistic::DesCc { c: 0 }.validate(1).is_ok());
    }

    #[test]
    fn sign_blocks_example() {
        let x = element(2, 8, "3 4 -1 -5 2 7 6 -8");
        let mu = blocks(&x, 0).unwrap();
        assert_eq!(mu.parts(), &[2, 2, 3, 1]);
        assert!(mu.first_colored());
        assert_eq!(pndes_from_blocks(&x).unwrap(), 2);
        assert_eq!(count(&x, &DescentStatistic::Pndes).unwrap(), 2);
    }

    #[test]
    fn colored_blocks_example() {
        let x = element(6, 6, "2[2] 4[2] 5[3] 1[4] 6[2] 3[1]");
        let mu = blocks(&x, 2).unwrap();
        assert_eq!(mu.parts(), &[2, 2, 1, 1]);
        assert!(mu.first_colored());
    }

    #[test]
    fn single_block_words() {
        let x = element(3, 4, "1[1] 2[1] 3[1] 4[1]");
        let same = blocks(&x, 1).unwrap();
        assert_eq!(same.parts(), &[4]);
        assert!(same.first_colored());
        let other = blocks(&x, 0).unwrap();
        assert_eq!(other.parts(), &[4]);
        assert!(!other.first_colored());
        assert!(blocks(&element(2, 0, ""), 0).is_err());
    }

    #[test]
    fn block_params_cases() {
        let mu = ColoredComposition::new(vec![2, 3, 4, 5], true).unwrap();
        assert_eq!(block_params(&mu, 14).unwrap().even_place_sum, 8);

        let mu = ColoredComposition::new(vec![2, 2, 3, 1], true).unwrap();
        let bp = block_params(&mu, 8).unwrap();
        assert_eq!(
            (bp.even_place_sum, bp.colored_count, bp.colored_blocks, bp.other_blocks, bp.transitions),
            (3, 5, 2, 2, 2)
        );

        let mu = ColoredComposition::new(vec![7], false).unwrap();
        let bp = block_params(&mu, 7).unwrap();
        assert_eq!(
            (bp.colored_count, bp.colored_blocks, bp.other_blocks, bp.transitions),
            (0, 0, 1, 0)
        );

        assert!(matches!(
            block_params(&mu, 8),
            Err(StatsError::SumMismatch { got: 7, expected: 8 })
        ));
    }

    #[test]
    fn block_count_formula_cases() {
        // two blocks, first negative: no positive-to-negative transition
        let x = element(2, 2, "-1 2");
        assert_eq!(pndes_from_blocks(&x).unwrap(), 0);
        // one all-positive block
        let y = element(2, 3, "2 3 1");
        assert_eq!(pndes_from_blocks(&y).unwrap(), 0);
        assert!(pndes_from_blocks(&element(3, 1, "1[0]")).is_err());
    }

    #[test]
    fn transitions_equal_pndes_exhaustively() {
        for n in 1..=6 {
            let params = GroupParams::new(2, n).unwrap();
            for x in params.iter_elements() {
                let mu = blocks(&x, 0).unwrap();
                let bp = block_params(&mu, n).unwrap();
                let direct = count(&x, &DescentStatistic::Pndes).unwrap();
                assert_eq!(u64::from(bp.transitions), direct, "element {x}");
                assert_eq!(pndes_from_blocks(&x).unwrap(), direct);
            }
        }
    }
}
