//! Cubelike graphs: Cayley graphs over the Boolean group Z_2^n.
//!
//! Vertices are n-bit strings and two vertices are adjacent when their XOR is
//! one of the generators. Bit `j` of a label is `x_j`, so the string `x_{n-1}…x_0`
//! renders most significant bit first. Edge index `k` (1-based) is carried by
//! coin value `k - 1` with the same bit convention on the coin wires.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest joint register (position + coin wires) any simulation will accept.
pub const MAX_WIRES: usize = 30;

/// Fixed-width bit string `x_{n-1}…x_1x_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    value: u64,
    width: u32,
}

impl BitString {
    pub fn new(value: u64, width: u32) -> Result<Self> {
        if width == 0 || width > 64 {
            return Err(Error::InvalidBitString(format!("width {width}")));
        }
        if width < 64 && value >> width != 0 {
            return Err(Error::InvalidBitString(format!(
                "{value} does not fit in {width} bits"
            )));
        }
        Ok(BitString { value, width })
    }

    pub fn zeros(width: u32) -> Result<Self> {
        Self::new(0, width)
    }

    pub fn ones(width: u32) -> Result<Self> {
        Self::new(low_mask(width), width)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn width(self) -> u32 {
        self.width
    }

    pub fn weight(self) -> u32 {
        self.value.count_ones()
    }

    pub fn bit(self, j: u32) -> bool {
        j < self.width && (self.value >> j) & 1 == 1
    }

    pub fn xor(self, other: BitString) -> Result<BitString> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        Ok(BitString {
            value: self.value ^ other.value,
            width: self.width,
        })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_bits(self.value, self.width))
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > 64 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::InvalidBitString(s.to_string()));
        }
        let value =
            u64::from_str_radix(s, 2).map_err(|_| Error::InvalidBitString(s.to_string()))?;
        BitString::new(value, s.len() as u32)
    }
}

pub(crate) fn low_mask(width: u32) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

pub(crate) fn render_bits(value: u64, width: u32) -> String {
    (0..width)
        .rev()
        .map(|j| if (value >> j) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Smallest `m` with `delta <= 2^m`.
pub fn coin_width(delta: usize) -> u32 {
    delta.next_power_of_two().trailing_zeros()
}

/// Ordered generating set of a cubelike graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    width: u32,
    elements: Vec<u64>,
}

impl GeneratingSet {
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Raw generator values in edge order: `values()[k-1]` is Ω(k).
    pub fn values(&self) -> &[u64] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = BitString> + '_ {
        self.elements.iter().map(move |&value| BitString {
            value,
            width: self.width,
        })
    }

    pub fn is_canonical(&self) -> bool {
        self.elements.windows(2).all(|w| w[0] < w[1])
    }
}

/// `Cay(Z_2^n, Ω)` together with its coin-register width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubelikeGraph {
    n: u32,
    omega: GeneratingSet,
    m: u32,
}

impl CubelikeGraph {
    /// Builds a graph from explicit generators.
    ///
    /// With `canonicalize` the generators are sorted lexicographically, otherwise
    /// the given order defines the edge labels.
    pub fn new(n: u32, elements: &[BitString], canonicalize: bool) -> Result<Self> {
        for e in elements {
            if e.width() != n {
                return Err(Error::WidthMismatch {
                    expected: n,
                    found: e.width(),
                });
            }
        }
        let values: Vec<u64> = elements.iter().map(|e| e.value()).collect();
        Self::from_values(n, values, canonicalize)
    }

    pub(crate) fn from_values(n: u32, mut values: Vec<u64>, canonicalize: bool) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::DimensionTooSmall {
                family: "cubelike graph",
                n,
                min: 1,
            });
        }
        if values.is_empty() {
            return Err(Error::EmptyGeneratingSet);
        }
        let mut seen = HashSet::with_capacity(values.len());
        for &v in &values {
            if v >> n != 0 {
                return Err(Error::InvalidBitString(format!(
                    "{v} does not fit in {n} bits"
                )));
            }
            if v == 0 {
                return Err(Error::IdentityInGeneratingSet);
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateGenerator(render_bits(v, n)));
            }
        }
        let m = coin_width(values.len());
        check_wires(n as usize + m as usize, MAX_WIRES)?;
        if canonicalize {
            values.sort_unstable();
        }
        Ok(CubelikeGraph {
            n,
            omega: GeneratingSet {
                width: n,
                elements: values,
            },
            m,
        })
    }

    /// Dimension `n`; the graph has `2^n` vertices.
    pub fn dimension(&self) -> u32 {
        self.n
    }

    /// Degree Δ = |Ω|.
    pub fn degree(&self) -> usize {
        self.omega.len()
    }

    /// Coin register width `m`, with `2^(m-1) < Δ <= 2^m`.
    pub fn coin_width(&self) -> u32 {
        self.m
    }

    pub fn generators(&self) -> &GeneratingSet {
        &self.omega
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.n
    }

    /// Number of coin slots `2^m`, including the padded ones.
    pub fn coin_slots(&self) -> usize {
        1usize << self.m
    }

    pub fn wires(&self) -> usize {
        (self.n + self.m) as usize
    }

    pub fn is_power_of_two_degree(&self) -> bool {
        self.degree() == self.coin_slots()
    }

    /// XOR of every generator: the vertex the walk from `0^n` concentrates on.
    pub fn target_vertex(&self) -> BitString {
        let value = self.omega.values().iter().fold(0, |acc, &x| acc ^ x);
        BitString {
            value,
            width: self.n,
        }
    }

    /// `v ⊕ Ω(k)` for the 1-based edge index `k`.
    pub fn neighbor(&self, v: BitString, k: usize) -> Result<BitString> {
        if v.width() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: v.width(),
            });
        }
        if k == 0 || k > self.degree() {
            return Err(Error::EdgeIndexOutOfRange {
                index: k,
                delta: self.degree(),
            });
        }
        Ok(BitString {
            value: v.value() ^ self.omega.values()[k - 1],
            width: self.n,
        })
    }

    pub fn check_vertex(&self, v: BitString) -> Result<()> {
        if v.width() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: v.width(),
            });
        }
        Ok(())
    }
}

pub(crate) fn check_wires(wires: usize, limit: usize) -> Result<()> {
    if wires > limit {
        Err(Error::TooManyWires { wires, limit })
    } else {
        Ok(())
    }
}

/// Hypercube Q_n: the unit vectors `0^i 1 0^j`.
pub fn hypercube(n: u32) -> Result<CubelikeGraph> {
    if n == 0 {
        return Err(Error::DimensionTooSmall {
            family: "hypercube",
            n,
            min: 1,
        });
    }
    CubelikeGraph::from_values(n, (0..n).map(|j| 1u64 << j).collect(), true)
}

/// Augmented cube AQ_n: unit vectors plus the suffix-ones strings `0^(n-i) 1^i`.
pub fn augmented_cube(n: u32) -> Result<CubelikeGraph> {
    if n < 2 {
        return Err(Error::DimensionTooSmall {
            family: "augmented cube",
            n,
            min: 2,
        });
    }
    let mut values: Vec<u64> = (0..n).map(|j| 1u64 << j).collect();
    // i = 1 repeats the unit vector 0^(n-1)1
    values.extend((2..=n).map(low_mask));
    CubelikeGraph::from_values(n, values, true)
}

/// Complete graph on `2^n` vertices: every nonzero string is a generator.
pub fn complete_graph(n: u32) -> Result<CubelikeGraph> {
    if n == 0 {
        return Err(Error::DimensionTooSmall {
            family: "complete graph",
            n,
            min: 1,
        });
    }
    check_wires(2 * n as usize, MAX_WIRES)?;
    CubelikeGraph::from_values(n, (1..=low_mask(n)).collect(), true)
}

/// Hypercube generators plus `extra` distinct non-basis generators sampled
/// uniformly with a seeded ChaCha stream, giving degree exactly `n + extra`.
pub fn random_cubelike(n: u32, extra: u64, seed: u64) -> Result<CubelikeGraph> {
    if n == 0 || n > 63 {
        return Err(Error::DimensionTooSmall {
            family: "random cubelike",
            n,
            min: 1,
        });
    }
    let max = low_mask(n) - n as u64;
    if extra > max {
        return Err(Error::TooManyExtras { n, extra, max });
    }
    let delta = n as usize + extra as usize;
    check_wires(n as usize + coin_width(delta) as usize, MAX_WIRES)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<u64> = (0..n).map(|j| 1u64 << j).collect();
    values.extend(
        index::sample(&mut rng, max as usize, extra as usize)
            .into_iter()
            .map(|i| nth_non_basis(i as u64)),
    );
    CubelikeGraph::from_values(n, values, true)
}

/// The `i`-th (0-based) positive integer that is not a power of two: 3, 5, 6, 7, 9, …
pub(crate) fn nth_non_basis(i: u64) -> u64 {
    // count of non-powers in 1..=v is v - (floor(log2 v) + 1)
    let count = |v: u64| v - (63 - v.leading_zeros() as u64 + 1);
    let want = i + 1;
    let mut v = want + 1;
    loop {
        let c = count(v);
        if c < want {
            v += want - c;
        } else {
            break;
        }
    }
    if v.is_power_of_two() {
        v - 1
    } else {
        v
    }
}

/// Per-iteration X patterns used by the shift compiler.
///
/// Entry `k` (0-based) is the XOR applied to the coin register before the
/// controlled flips of edge `k + 1`: `1^m` first, then `0^(m-r) 1^r` where `r`
/// is the carry length of the increment `k - 1 -> k`. Returned as raw values
/// so that `m = 0` (degree one) yields the single empty pattern.
pub fn b_patterns(m: u32) -> Vec<u64> {
    let slots = 1u64 << m;
    (0..slots)
        .map(|k| {
            if k == 0 {
                low_mask(m)
            } else {
                low_mask(k.trailing_zeros() + 1)
            }
        })
        .collect()
}

/// [`b_patterns`] as bit strings of width `m >= 1`.
pub fn b_sequence(m: u32) -> Result<Vec<BitString>> {
    if m == 0 || m > 30 {
        return Err(Error::DimensionTooSmall {
            family: "coin register",
            n: m,
            min: 1,
        });
    }
    Ok(b_patterns(m)
        .into_iter()
        .map(|value| BitString { value, width: m })
        .collect())
}

/// Parses the plain-text generating-set format: `n=<int>` then one bit string
/// per line, `#` starting a comment.
pub fn parse_generating_set(text: &str) -> Result<(u32, Vec<BitString>)> {
    let mut n: Option<u32> = None;
    let mut elements = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                let value = line
                    .strip_prefix("n=")
                    .ok_or_else(|| Error::parse(line_no, "expected `n=<int>` header"))?;
                let parsed: u32 = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad dimension {value:?}")))?;
                if parsed == 0 || parsed > 63 {
                    return Err(Error::parse(
                        line_no,
                        format!("dimension {parsed} out of range"),
                    ));
                }
                n = Some(parsed);
            }
            Some(width) => {
                let bits: BitString = line
                    .parse()
                    .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
                if bits.width() != width {
                    return Err(Error::parse(
                        line_no,
                        format!("{line} has width {}, expected {width}", bits.width()),
                    ));
                }
                elements.push(bits);
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `n=<int>` header"))?;
    Ok((n, elements))
}

pub fn render_generating_set(g: &CubelikeGraph) -> String {
    let mut out = format!("n={}\n", g.dimension());
    for x in g.generators().iter() {
        out.push_str(&x.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn rendered(g: &CubelikeGraph) -> Vec<String> {
        g.generators().iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn bitstring_round_trip_and_bounds() {
        let b = bits("0110");
        assert_eq!(b.value(), 6);
        assert_eq!(b.width(), 4);
        assert_eq!(b.to_string(), "0110");
        assert!(BitString::new(8, 3).is_err());
        assert!("01x".parse::<BitString>().is_err());
        assert!("".parse::<BitString>().is_err());
    }

    #[test]
    fn make_graph_canonicalizes() {
        let g = CubelikeGraph::new(3, &[bits("100"), bits("001"), bits("010")], true).unwrap();
        assert_eq!(rendered(&g), ["001", "010", "100"]);
        assert_eq!(g.degree(), 3);
        assert_eq!(g.coin_width(), 2);
    }

    #[test]
    fn make_graph_keeps_explicit_order() {
        let g = CubelikeGraph::new(3, &[bits("100"), bits("001")], false).unwrap();
        assert_eq!(rendered(&g), ["100", "001"]);
        assert!(!g.generators().is_canonical());
    }

    #[test]
    fn make_graph_augmented_three() {
        let elems: Vec<_> = ["001", "010", "011", "100", "111"]
            .iter()
            .map(|s| bits(s))
            .collect();
        let g = CubelikeGraph::new(3, &elems, true).unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.coin_width(), 3);
    }

    #[test]
    fn make_graph_errors() {
        assert!(matches!(
            CubelikeGraph::new(3, &[bits("000"), bits("001")], true),
            Err(Error::IdentityInGeneratingSet)
        ));
        assert!(matches!(
            CubelikeGraph::new(3, &[bits("001"), bits("001")], true),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            CubelikeGraph::new(3, &[], true),
            Err(Error::EmptyGeneratingSet)
        ));
        assert!(matches!(
            CubelikeGraph::new(3, &[bits("01")], true),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn coin_width_brackets_degree() {
        for delta in 1..=300usize {
            let m = coin_width(delta);
            assert!(delta <= 1 << m);
            if m > 0 {
                assert!(delta > 1 << (m - 1));
            }
        }
    }

    #[test]
    fn hypercube_family() {
        assert_eq!(rendered(&hypercube(3).unwrap()), ["001", "010", "100"]);
        assert_eq!(rendered(&hypercube(1).unwrap()), ["1"]);
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.degree(), q4.coin_width()), (4, 2));
    }

    #[test]
    fn augmented_family() {
        assert_eq!(
            rendered(&augmented_cube(3).unwrap()),
            ["001", "010", "011", "100", "111"]
        );
        let aq4 = augmented_cube(4).unwrap();
        assert_eq!((aq4.degree(), aq4.coin_width()), (7, 3));
        assert!(matches!(
            augmented_cube(1),
            Err(Error::DimensionTooSmall { .. })
        ));
        for n in 2..=20 {
            assert_eq!(augmented_cube(n).unwrap().degree(), 2 * n as usize - 1);
        }
    }

    #[test]
    fn augmented_two_matches_set_expansion() {
        // expand {0^i 1 0^j : i+j=1} ∪ {0^(2-i) 1^i : 1<=i<=2} by hand
        let mut expected = vec!["10", "01", "01", "11"];
        expected.sort();
        expected.dedup();
        assert_eq!(rendered(&augmented_cube(2).unwrap()), expected);
    }

    #[test]
    fn complete_family() {
        assert_eq!(rendered(&complete_graph(2).unwrap()), ["01", "10", "11"]);
        let k8 = complete_graph(3).unwrap();
        assert_eq!((k8.degree(), k8.coin_width()), (7, 3));
        assert_eq!(complete_graph(1).unwrap(), hypercube(1).unwrap());
        assert!(matches!(
            complete_graph(16),
            Err(Error::TooManyWires { .. })
        ));
    }

    #[test]
    fn random_family() {
        assert_eq!(random_cubelike(4, 0, 99).unwrap(), hypercube(4).unwrap());
        assert_eq!(
            random_cubelike(3, 4, 1).unwrap().degree(),
            complete_graph(3).unwrap().degree()
        );
        assert_eq!(
            random_cubelike(5, 2, 7).unwrap(),
            random_cubelike(5, 2, 7).unwrap()
        );
        assert!(matches!(
            random_cubelike(3, 5, 0),
            Err(Error::TooManyExtras { .. })
        ));
        let g = random_cubelike(6, 5, 3).unwrap();
        assert_eq!(g.degree(), 11);
        assert!(g.generators().is_canonical());
    }

    #[test]
    fn nth_non_basis_matches_enumeration() {
        let listed: Vec<u64> = (1..5000u64).filter(|v| !v.is_power_of_two()).collect();
        for (i, &v) in listed.iter().enumerate() {
            assert_eq!(nth_non_basis(i as u64), v, "index {i}");
        }
    }

    #[test]
    fn target_vertex_examples() {
        assert_eq!(hypercube(3).unwrap().target_vertex().to_string(), "111");
        assert_eq!(
            augmented_cube(3).unwrap().target_vertex().to_string(),
            "011"
        );
        let g = CubelikeGraph::new(
            4,
            &[bits("0101"), bits("0111"), bits("1001"), bits("1010")],
            true,
        )
        .unwrap();
        assert_eq!(g.target_vertex().to_string(), "0001");
    }

    #[test]
    fn neighbor_examples() {
        let g = CubelikeGraph::new(
            4,
            &[bits("0101"), bits("0111"), bits("1001"), bits("1010")],
            true,
        )
        .unwrap();
        let v = bits("1101");
        assert_eq!(g.neighbor(v, 1).unwrap().to_string(), "1000");
        assert_eq!(g.neighbor(v, 2).unwrap().to_string(), "1010");
        assert_eq!(g.neighbor(v, 3).unwrap().to_string(), "0100");
        // 1101 ⊕ 1010
        assert_eq!(g.neighbor(v, 4).unwrap().to_string(), "0111");
        assert!(matches!(
            g.neighbor(v, 5),
            Err(Error::EdgeIndexOutOfRange { .. })
        ));
        assert!(matches!(
            g.neighbor(v, 0),
            Err(Error::EdgeIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn b_sequence_examples() {
        let show = |m| {
            b_sequence(m)
                .unwrap()
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(2), ["11", "01", "11", "01"]);
        assert_eq!(show(1), ["1", "1"]);
        assert!(b_sequence(0).is_err());
        assert_eq!(b_patterns(0), [0]);
    }

    #[test]
    fn b_sequence_three_against_search_oracle() {
        // oracle: pick each pattern as whatever XOR sends the (already relabeled)
        // coin value k to 1^m
        let m = 3;
        let ones = low_mask(m);
        let mut applied = 0u64;
        let mut oracle = Vec::new();
        for k in 0..(1u64 << m) {
            let pattern = ones ^ (k ^ applied);
            oracle.push(pattern);
            applied ^= pattern;
        }
        let expected: Vec<u64> = ["111", "001", "011", "001", "111", "001", "011", "001"]
            .iter()
            .map(|s| bits(s).value())
            .collect();
        assert_eq!(oracle, expected);
        assert_eq!(b_patterns(m), expected);
        assert_eq!(expected.iter().map(|x| x.count_ones()).sum::<u32>(), 14);
    }

    #[test]
    fn generating_set_file_round_trip() {
        let text = "# four generators\nn=4\n0101\n0111 # second\n\n1001\n1010\n";
        let (n, elems) = parse_generating_set(text).unwrap();
        let g = CubelikeGraph::new(n, &elems, true).unwrap();
        let again = parse_generating_set(&render_generating_set(&g)).unwrap();
        assert_eq!(again, (n, elems));
    }

    #[test]
    fn generating_set_file_errors() {
        assert!(matches!(
            parse_generating_set("n=3\n001\n01\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_generating_set("001\n").is_err());
        assert!(parse_generating_set("# nothing\n").is_err());
        assert!(parse_generating_set("n=x\n").is_err());
    }
}
