//! Strings over `{0, 1, *}` and addressings of graphs into the squashed cube.
//!
//! A string `x` of length `m` stands for the subcube `H(x) ⊆ {0,1}^m` of all
//! ways to resolve its jokers, so `|H(x)| = 2^j(x)` where `j(x)` counts the
//! jokers. The distance between two strings counts coordinates where one has
//! `0` and the other `1`.
//!
//! A biclique partition `B_1, …, B_r` induces the addressing whose `i`-th
//! coordinate is `0` on `part_a` of `B_i`, `1` on `part_b` and `*` elsewhere;
//! conversely every coordinate of an addressing defines a biclique.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::biclique::{verify_partition, Biclique, BicliquePartition};
use crate::error::CubeError;
use crate::graph::Graph;

/// Longest string for which [`volume`] is computed.
pub const VOLUME_MAX_LEN: usize = 62;
/// Longest string for which [`subcube_cover`] enumerates the cube.
pub const ENUMERATION_MAX_LEN: usize = 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Joker,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Joker => '*',
        }
    }
}

/// A string over `{0, 1, *}`, stored as a zeros mask and a ones mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AddressString {
    len: usize,
    zeros: Vec<u64>,
    ones: Vec<u64>,
}

impl AddressString {
    /// The all-joker string of length `len`.
    pub fn jokers(len: usize) -> Self {
        let words = len.div_ceil(64);
        AddressString {
            len,
            zeros: vec![0; words],
            ones: vec![0; words],
        }
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let mut s = AddressString::jokers(symbols.len());
        for (i, &sym) in symbols.iter().enumerate() {
            s.set(i, sym);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Symbol {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let (w, bit) = (i / 64, 1u64 << (i % 64));
        if self.zeros[w] & bit != 0 {
            Symbol::Zero
        } else if self.ones[w] & bit != 0 {
            Symbol::One
        } else {
            Symbol::Joker
        }
    }

    pub fn set(&mut self, i: usize, sym: Symbol) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let (w, bit) = (i / 64, 1u64 << (i % 64));
        self.zeros[w] &= !bit;
        self.ones[w] &= !bit;
        match sym {
            Symbol::Zero => self.zeros[w] |= bit,
            Symbol::One => self.ones[w] |= bit,
            Symbol::Joker => {}
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// `j(x)`: the number of jokers, i.e. the dimension of `H(x)`.
    pub fn joker_count(&self) -> usize {
        let fixed: u32 = self
            .zeros
            .iter()
            .zip(&self.ones)
            .map(|(z, o)| (z | o).count_ones())
            .sum();
        self.len - fixed as usize
    }

    pub fn has_zero(&self) -> bool {
        self.zeros.iter().any(|&w| w != 0)
    }

    /// Whether no coordinate is `0`.
    pub fn in_ones_and_jokers(&self) -> bool {
        !self.has_zero()
    }

    /// Whether the binary string `bits` (bit `i` = coordinate `i`) lies in
    /// `H(self)`. Only meaningful for strings of at most 64 symbols.
    fn covers_word(&self, bits: u64) -> bool {
        let z = self.zeros.first().copied().unwrap_or(0);
        let o = self.ones.first().copied().unwrap_or(0);
        bits & z == 0 && bits & o == o
    }
}

impl fmt::Display for AddressString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_char(s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for AddressString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for AddressString {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '0' => Ok(Symbol::Zero),
                '1' => Ok(Symbol::One),
                '*' => Ok(Symbol::Joker),
                other => Err(CubeError::BadSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AddressString::from_symbols(&symbols))
    }
}

fn common_len<'a, I>(family: I) -> Result<Option<usize>, CubeError>
where
    I: IntoIterator<Item = &'a AddressString>,
{
    let mut len = None;
    for x in family {
        match len {
            None => len = Some(x.len),
            Some(l) if l != x.len => return Err(CubeError::LengthMismatch(l, x.len)),
            _ => {}
        }
    }
    Ok(len)
}

/// Number of coordinates where one string is `0` and the other `1`.
pub fn distance(x: &AddressString, y: &AddressString) -> Result<usize, CubeError> {
    if x.len != y.len {
        return Err(CubeError::LengthMismatch(x.len, y.len));
    }
    Ok(x.zeros
        .iter()
        .zip(&x.ones)
        .zip(y.zeros.iter().zip(&y.ones))
        .map(|((zx, ox), (zy, oy))| ((zx & oy) | (ox & zy)).count_ones() as usize)
        .sum())
}

/// `vol(F) = Σ 2^j(x)`.
pub fn volume(family: &[AddressString]) -> Result<u128, CubeError> {
    if let Some(len) = common_len(family)? {
        if len > VOLUME_MAX_LEN {
            return Err(CubeError::TooLong {
                len,
                limit: VOLUME_MAX_LEN,
            });
        }
    }
    Ok(family.iter().map(|x| 1u128 << x.joker_count()).sum())
}

/// Whether all pairwise distances are exactly 1.
pub fn is_one_neighborly(family: &[AddressString]) -> Result<bool, CubeError> {
    common_len(family)?;
    for (i, x) in family.iter().enumerate() {
        for y in &family[i + 1..] {
            if distance(x, y)? != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counts over the explicit cube `{0,1}^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeCover {
    /// `|∪ H(x)|`.
    pub covered: u64,
    /// `Σ |H(x)|`, counting binary strings once per subcube containing them.
    pub with_multiplicity: u64,
}

impl CubeCover {
    pub fn is_disjoint(&self) -> bool {
        self.covered == self.with_multiplicity
    }
}

/// Resolves every subcube explicitly by walking all `2^m` binary strings.
pub fn subcube_cover(family: &[AddressString]) -> Result<CubeCover, CubeError> {
    let Some(len) = common_len(family)? else {
        return Ok(CubeCover {
            covered: 0,
            with_multiplicity: 0,
        });
    };
    if len > ENUMERATION_MAX_LEN {
        return Err(CubeError::TooLong {
            len,
            limit: ENUMERATION_MAX_LEN,
        });
    }
    let mut cover = CubeCover {
        covered: 0,
        with_multiplicity: 0,
    };
    for bits in 0u64..1 << len {
        let hits = family.iter().filter(|x| x.covers_word(bits)).count() as u64;
        cover.with_multiplicity += hits;
        cover.covered += u64::from(hits > 0);
    }
    Ok(cover)
}

/// A map from the vertices `1..=n` to strings of a common length `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Addressing {
    width: usize,
    strings: Vec<AddressString>,
}

impl Addressing {
    /// `strings[v - 1]` is the string of vertex `v`.
    pub fn new(width: usize, strings: Vec<AddressString>) -> Result<Self, CubeError> {
        if let Some(x) = strings.iter().find(|x| x.len != width) {
            return Err(CubeError::LengthMismatch(width, x.len));
        }
        Ok(Addressing { width, strings })
    }

    /// The common string length `m`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn vertex_count(&self) -> usize {
        self.strings.len()
    }

    pub fn get(&self, v: usize) -> &AddressString {
        &self.strings[v - 1]
    }

    pub fn strings(&self) -> &[AddressString] {
        &self.strings
    }

    /// The strings of the listed vertices.
    pub fn family(&self, vertices: &[usize]) -> Vec<AddressString> {
        vertices.iter().map(|&v| self.get(v).clone()).collect()
    }
}

/// The addressing induced by a valid biclique partition of `g`, using each
/// biclique's stored orientation.
pub fn partition_to_addressing(g: &Graph, p: &BicliquePartition) -> Result<Addressing, CubeError> {
    match verify_partition(g, p) {
        Ok(Ok(())) => {}
        Ok(Err(v)) => return Err(CubeError::InvalidPartition(v.to_string())),
        Err(e) => return Err(CubeError::InvalidPartition(e.to_string())),
    }
    let width = p.len();
    let mut strings = vec![AddressString::jokers(width); g.n()];
    for (i, b) in p.iter().enumerate() {
        for &v in b.part_a() {
            strings[v - 1].set(i, Symbol::Zero);
        }
        for &v in b.part_b() {
            strings[v - 1].set(i, Symbol::One);
        }
    }
    Addressing::new(width, strings)
}

/// One biclique per coordinate: the vertices reading `0` against those
/// reading `1`. Coordinates where either side is empty claim no edges and
/// are skipped.
pub fn addressing_to_partition(a: &Addressing) -> BicliquePartition {
    (0..a.width)
        .filter_map(|i| {
            let side = |sym: Symbol| -> Vec<usize> {
                (1..=a.strings.len())
                    .filter(|&v| a.get(v).get(i) == sym)
                    .collect()
            };
            let (zeros, ones) = (side(Symbol::Zero), side(Symbol::One));
            (!zeros.is_empty() && !ones.is_empty()).then(|| Biclique::new(zeros, ones))
        })
        .collect()
}

/// The addressing of `K_n` into the squashed `(n − 1)`-cube given by the
/// nested stars: vertex `v < n` gets `1^(v−1) 0 *^(n−1−v)` and vertex `n`
/// gets `1^(n−1)`.
pub fn graham_pollak_addressing(n: usize) -> Result<Addressing, CubeError> {
    if n < 2 {
        return Err(CubeError::TooFewVertices(n));
    }
    let width = n - 1;
    let strings = (1..=n)
        .map(|v| {
            let mut x = AddressString::jokers(width);
            for i in 0..width.min(v - 1) {
                x.set(i, Symbol::One);
            }
            if v < n {
                x.set(v - 1, Symbol::Zero);
            }
            x
        })
        .collect();
    Addressing::new(width, strings)
}

/// Whether every listed vertex has some coordinate equal to `0`.
pub fn clique_side_has_zero(a: &Addressing, clique: &[usize]) -> bool {
    clique.iter().all(|&v| a.get(v).has_zero())
}

/// One line per vertex: `<v> <string>`.
pub fn write_addressing(a: &Addressing) -> String {
    let mut out = String::new();
    for (i, x) in a.strings.iter().enumerate() {
        writeln!(out, "{} {x}", i + 1).unwrap();
    }
    out
}

/// Parses the format of [`write_addressing`]. Every vertex `1..=n` must
/// appear exactly once; lines may come in any order.
pub fn parse_addressing(text: &str) -> Result<Addressing, CubeError> {
    let mut entries: Vec<(usize, AddressString)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| CubeError::Parse { line, message };
        let mut toks = raw.split_whitespace();
        let Some(first) = toks.next() else { continue };
        if first.starts_with('c') || first.starts_with('#') {
            continue;
        }
        let v: usize = first
            .parse()
            .map_err(|_| err(format!("invalid vertex {first:?}")))?;
        let x: AddressString = toks
            .next()
            .unwrap_or("")
            .parse()
            .map_err(|e: CubeError| err(e.to_string()))?;
        if toks.next().is_some() {
            return Err(err("trailing tokens".into()));
        }
        entries.push((v, x));
    }
    entries.sort_by_key(|(v, _)| *v);
    for (i, (v, _)) in entries.iter().enumerate() {
        if *v != i + 1 {
            return Err(CubeError::Parse {
                line: 0,
                message: format!("vertices must be exactly 1..={}; found {v}", entries.len()),
            });
        }
    }
    let width = entries.first().map_or(0, |(_, x)| x.len);
    Addressing::new(width, entries.into_iter().map(|(_, x)| x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn s(x: &str) -> AddressString {
        x.parse().unwrap()
    }

    fn fam(xs: &[&str]) -> Vec<AddressString> {
        xs.iter().map(|x| s(x)).collect()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&s("01*"), &s("0*1")).unwrap(), 0);
        assert_eq!(distance(&s("0"), &s("1")).unwrap(), 1);
        assert_eq!(distance(&s("010"), &s("101")).unwrap(), 3);
        assert_eq!(
            distance(&s("01"), &s("0")),
            Err(CubeError::LengthMismatch(2, 1))
        );
    }

    #[test]
    fn distance_across_word_boundary() {
        let mut x = AddressString::jokers(130);
        let mut y = AddressString::jokers(130);
        for i in [0, 63, 64, 129] {
            x.set(i, Symbol::Zero);
            y.set(i, Symbol::One);
        }
        assert_eq!(distance(&x, &y).unwrap(), 4);
        assert_eq!(x.joker_count(), 126);
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume(&fam(&["**"])).unwrap(), 4);
        assert_eq!(volume(&fam(&["0*", "10", "11"])).unwrap(), 4);
        assert_eq!(volume(&[]).unwrap(), 0);
        assert!(volume(&[AddressString::jokers(63)]).is_err());
        assert!(volume(&fam(&["0", "01"])).is_err());
    }

    #[test]
    fn neighborly_examples() {
        assert!(is_one_neighborly(&fam(&["0*", "10", "11"])).unwrap());
        assert!(!is_one_neighborly(&fam(&["0*", "1*", "**"])).unwrap());
        assert!(is_one_neighborly(&fam(&["*0*"])).unwrap());
    }

    #[test]
    fn cover_counts() {
        let c = subcube_cover(&fam(&["0*", "10", "11"])).unwrap();
        assert_eq!(
            c,
            CubeCover {
                covered: 4,
                with_multiplicity: 4
            }
        );
        let c = subcube_cover(&fam(&["0*", "**"])).unwrap();
        assert_eq!(
            c,
            CubeCover {
                covered: 4,
                with_multiplicity: 6
            }
        );
        assert!(!c.is_disjoint());
    }

    #[test]
    fn partition_to_addressing_on_k3() {
        let k3 = complete_graph(3).unwrap();
        let p = BicliquePartition::new(vec![Biclique::new([1], [2, 3]), Biclique::new([2], [3])]);
        let a = partition_to_addressing(&k3, &p).unwrap();
        assert_eq!(a.strings(), &fam(&["0*", "10", "11"])[..]);
        assert_eq!(addressing_to_partition(&a), p);

        let bad = BicliquePartition::new(vec![Biclique::new([1], [2, 3])]);
        assert!(matches!(
            partition_to_addressing(&k3, &bad),
            Err(CubeError::InvalidPartition(_))
        ));
    }

    #[test]
    fn single_edge_addressing() {
        let g = Graph::from_edges(2, [(1, 2)]).unwrap();
        let p = BicliquePartition::new(vec![Biclique::new([1], [2])]);
        let a = partition_to_addressing(&g, &p).unwrap();
        assert_eq!(a.strings(), &fam(&["0", "1"])[..]);
        let back = addressing_to_partition(&Addressing::new(1, fam(&["0", "1"])).unwrap());
        assert_eq!(back, p);
    }

    #[test]
    fn all_joker_addressing_claims_nothing() {
        let a = Addressing::new(3, fam(&["***", "***"])).unwrap();
        assert!(addressing_to_partition(&a).is_empty());
    }

    #[test]
    fn graham_pollak_small_cases() {
        let a = graham_pollak_addressing(2).unwrap();
        assert_eq!(a.strings(), &fam(&["0", "1"])[..]);
        assert_eq!(volume(a.strings()).unwrap(), 2);

        let a = graham_pollak_addressing(3).unwrap();
        assert_eq!(a.strings(), &fam(&["0*", "10", "11"])[..]);
        assert_eq!(volume(a.strings()).unwrap(), 4);

        let a = graham_pollak_addressing(5).unwrap();
        assert_eq!(volume(a.strings()).unwrap(), 16);
        assert!(is_one_neighborly(a.strings()).unwrap());

        assert!(graham_pollak_addressing(1).is_err());

        // the K_3 star partition comes back out
        let p = addressing_to_partition(&graham_pollak_addressing(3).unwrap());
        assert_eq!(
            p,
            BicliquePartition::new(vec![Biclique::new([1], [2, 3]), Biclique::new([2], [3])])
        );
    }

    #[test]
    fn zero_on_clique_side() {
        let g = Graph::from_edges(4, [(1, 3), (1, 2), (2, 4)]).unwrap();
        let p = BicliquePartition::new(vec![Biclique::new([1], [2, 3]), Biclique::new([2], [4])]);
        let a = partition_to_addressing(&g, &p.oriented_for_independent_side(&[3, 4])).unwrap();
        assert!(clique_side_has_zero(&a, &[1, 2]));
        assert!(a.get(3).in_ones_and_jokers() && a.get(4).in_ones_and_jokers());

        let a = Addressing::new(2, fam(&["1*", "*1"])).unwrap();
        assert!(!clique_side_has_zero(&a, &[1, 2]));
        assert!(clique_side_has_zero(&a, &[]));
    }

    #[test]
    fn addressing_text_format() {
        let a = graham_pollak_addressing(3).unwrap();
        let text = write_addressing(&a);
        assert_eq!(text, "1 0*\n2 10\n3 11\n");
        assert_eq!(parse_addressing(&text).unwrap(), a);
        assert_eq!(parse_addressing("2 10\n1 0*\n3 11\n").unwrap(), a);
        assert!(parse_addressing("1 0*\n3 11\n").is_err());
        assert!(parse_addressing("1 0x\n").is_err());
        assert!(parse_addressing("1 0*\n2 1\n").is_err());
    }
}
