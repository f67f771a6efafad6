//! Non-crossing partitions of `{1..n}`, the Kreweras complement, and the
//! partition tables shared by the convolution and coproduct kernels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::series::Word;

/// Largest `n` accepted by [`enumerate_nc`]; `|NC(12)| = 208012`.
pub const NC_CAP: usize = 12;

/// A non-crossing partition of `{1..n}` in canonical form: elements ascending
/// inside each block, blocks sorted by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NcPartition {
    /// Validate and canonicalise `blocks` as a non-crossing partition of `{1..n}`.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("partition of an empty set".into()));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b.first().copied().unwrap_or(0));
        check_partition(n, &blocks)?;
        if !crossing_free(n, &blocks) {
            return Err(Error::Domain("partition has a crossing".into()));
        }
        Ok(NcPartition { n, blocks })
    }

    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        NcPartition { n, blocks }
    }

    /// `0_n`, the partition into singletons.
    pub fn discrete(n: usize) -> Self {
        NcPartition::from_canonical(n, (1..=n).map(|i| vec![i]).collect())
    }

    /// `1_n`, the one-block partition.
    pub fn full(n: usize) -> Self {
        NcPartition::from_canonical(n, vec![(1..=n).collect()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Restricted growth string: entry `i` is the index of the block holding `i+1`.
    pub fn rgs(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &e in b {
                labels[e - 1] = k;
            }
        }
        labels
    }

    fn canonicalise(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        NcPartition { n, blocks }
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            f.write_str("{")?;
            for (i, e) in b.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl FromStr for NcPartition {
    type Err = Error;

    /// Parses the textual form `"{1,3}{2}"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("bad partition literal `{s}`"));
        let mut blocks = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('{').ok_or_else(bad)?;
            let end = inner.find('}').ok_or_else(bad)?;
            let block = inner[..end]
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = inner[end + 1..].trim_start();
        }
        let n = blocks.iter().map(Vec::len).sum();
        NcPartition::new(n, blocks)
    }
}

fn check_partition(n: usize, blocks: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for b in blocks {
        if b.is_empty() {
            return Err(Error::Domain("empty block".into()));
        }
        for &e in b {
            if e == 0 || e > n || seen[e - 1] {
                return Err(Error::Domain(format!("blocks do not partition {{1..{n}}}")));
            }
            seen[e - 1] = true;
        }
    }
    if seen.iter().all(|&x| x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("blocks do not cover {{1..{n}}}")))
    }
}

fn crossing_free(n: usize, blocks: &[Vec<usize>]) -> bool {
    let mut label = vec![0; n];
    for (k, b) in blocks.iter().enumerate() {
        for &e in b {
            label[e - 1] = k;
        }
    }
    // quadruple scan a<b<c<d
    for a in 0..n {
        for b in a + 1..n {
            if label[b] == label[a] {
                continue;
            }
            for c in b + 1..n {
                if label[c] != label[a] {
                    continue;
                }
                for d in c + 1..n {
                    if label[d] == label[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True iff no indices `a<b<c<d` have `a,c` in one block and `b,d` in another.
///
/// `blocks` must partition `{1..n}` where `n` is the total number of elements.
pub fn is_noncrossing(blocks: &[Vec<usize>]) -> Result<bool> {
    let n = blocks.iter().map(Vec::len).sum();
    check_partition(n, blocks)?;
    Ok(crossing_free(n, blocks))
}

/// All non-crossing partitions of `{1..n}`, ordered by restricted growth string.
pub fn enumerate_nc(n: usize) -> Result<Vec<NcPartition>> {
    if n == 0 || n > NC_CAP {
        return Err(Error::Domain(format!(
            "NC(n) enumeration needs 1 <= n <= {NC_CAP}, got {n}"
        )));
    }
    let mut memo: HashMap<usize, Vec<Vec<Vec<usize>>>> = HashMap::new();
    let raw = nc_interval(n, &mut memo);
    let mut out: Vec<NcPartition> = raw
        .into_iter()
        .map(|blocks| NcPartition::canonicalise(n, blocks))
        .collect();
    out.sort_by_cached_key(NcPartition::rgs);
    Ok(out)
}

/// NC partitions of `{1..len}` as raw block lists, by the block of the first
/// element: the gaps it leaves are independent smaller problems.
fn nc_interval(len: usize, memo: &mut HashMap<usize, Vec<Vec<Vec<usize>>>>) -> Vec<Vec<Vec<usize>>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&len) {
        return v.clone();
    }
    let mut out = Vec::new();
    // bit i of `mask` puts element i+2 into the block of 1
    for mask in 0u32..(1u32 << (len - 1)) {
        let mut first = vec![1usize];
        first.extend((0..len - 1).filter(|i| mask >> i & 1 == 1).map(|i| i + 2));
        // gaps: (first[j], first[j+1]) exclusive, then after the last member
        let mut gaps = Vec::new();
        for win in first.windows(2) {
            gaps.push((win[0], win[1] - win[0] - 1));
        }
        let last = *first.last().unwrap();
        gaps.push((last, len - last));
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![first.clone()]];
        for &(offset, glen) in &gaps {
            if glen == 0 {
                continue;
            }
            let sub = nc_interval(glen, memo);
            let mut next = Vec::with_capacity(partial.len() * sub.len());
            for p in &partial {
                for q in &sub {
                    let mut merged = p.clone();
                    merged.extend(q.iter().map(|b| b.iter().map(|e| e + offset).collect()));
                    next.push(merged);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    memo.insert(len, out.clone());
    out
}

/// The Kreweras complement, computed as the cycle structure of `π⁻¹∘γ` with
/// `γ = (1 2 … n)`; this is the coarsest partition of the barred points in
/// `1 1̄ 2 2̄ … n n̄` keeping the union non-crossing.
pub fn kreweras(p: &NcPartition) -> NcPartition {
    let n = p.n;
    // inverse of the block-cycle permutation: b_j -> b_{j-1}
    let mut pi_inv = vec![0usize; n];
    for b in &p.blocks {
        for (j, &e) in b.iter().enumerate() {
            let prev = if j == 0 { b[b.len() - 1] } else { b[j - 1] };
            pi_inv[e - 1] = prev;
        }
    }
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i - 1] {
            seen[i - 1] = true;
            cycle.push(i);
            let gamma = if i == n { 1 } else { i + 1 };
            i = pi_inv[gamma - 1];
        }
        blocks.push(cycle);
    }
    NcPartition::canonicalise(n, blocks)
}

/// Subwords of `w` at the positions of each block of `p`, in block order.
pub fn restrict_word(w: &Word, p: &NcPartition) -> Result<Vec<Word>> {
    if w.len() != p.n {
        return Err(Error::Domain(format!(
            "word of length {} against a partition of {}",
            w.len(),
            p.n
        )));
    }
    let letters = w.letters();
    Ok(p.blocks
        .iter()
        .map(|b| Word::from_raw(b.iter().map(|&i| letters[i - 1]).collect()))
        .collect())
}

/// One precomputed term of the `NC(n)` sum: the blocks of `π` and of `K(π)`,
/// zero-based.
#[derive(Debug, Clone)]
pub(crate) struct NcTerm {
    pub pi: Vec<Vec<usize>>,
    pub kreweras: Vec<Vec<usize>>,
    pub pi_discrete: bool,
}

static TABLES: [OnceLock<Vec<NcTerm>>; NC_CAP + 1] = [const { OnceLock::new() }; NC_CAP + 1];

/// Cached `(π, K(π))` pairs for `NC(n)`.
pub(crate) fn nc_table(n: usize) -> Result<&'static [NcTerm]> {
    if n == 0 || n > NC_CAP {
        return Err(Error::Domain(format!(
            "word length {n} exceeds the supported maximum {NC_CAP}"
        )));
    }
    Ok(TABLES[n].get_or_init(|| {
        let zero_based = |p: &NcPartition| -> Vec<Vec<usize>> {
            p.blocks
                .iter()
                .map(|b| b.iter().map(|e| e - 1).collect())
                .collect()
        };
        enumerate_nc(n)
            .expect("n within cap")
            .iter()
            .map(|p| NcTerm {
                pi: zero_based(p),
                kreweras: zero_based(&kreweras(p)),
                pi_discrete: p.is_discrete(),
            })
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> NcPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_nc(1).unwrap(), vec![part("{1}")]);
        assert_eq!(enumerate_nc(3).unwrap().len(), 5);
        let four = enumerate_nc(4).unwrap();
        assert_eq!(four.len(), 14);
        assert!(!four.iter().any(|p| p.blocks() == [vec![1, 3], vec![2, 4]]));
        assert!(enumerate_nc(0).is_err());
        assert!(enumerate_nc(NC_CAP + 1).is_err());
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (i, &c) in catalan.iter().enumerate() {
            assert_eq!(enumerate_nc(i + 1).unwrap().len(), c);
        }
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(kreweras(&NcPartition::discrete(3)), NcPartition::full(3));
        assert_eq!(kreweras(&NcPartition::full(3)), NcPartition::discrete(3));
        assert_eq!(kreweras(&part("{1,2}{3}")), part("{1}{2,3}"));
    }

    #[test]
    fn kreweras_block_count() {
        for n in 1..=8 {
            for p in enumerate_nc(n).unwrap() {
                let k = kreweras(&p);
                assert_eq!(p.num_blocks() + k.num_blocks(), n + 1);
                assert!(is_noncrossing(k.blocks()).unwrap());
            }
        }
    }

    #[test]
    fn kreweras_is_a_bijection() {
        for n in 1..=7 {
            let all = enumerate_nc(n).unwrap();
            let mut images: Vec<_> = all.iter().map(kreweras).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), all.len());
            for p in &all {
                assert_eq!(kreweras(&kreweras(p)).num_blocks(), p.num_blocks());
            }
        }
    }

    #[test]
    fn noncrossing_predicate() {
        assert!(!is_noncrossing(&[vec![1, 3], vec![2, 4]]).unwrap());
        assert!(is_noncrossing(&[vec![1, 4], vec![2, 3]]).unwrap());
        assert!(is_noncrossing(&[vec![1, 2], vec![2]]).is_err());
        assert!(is_noncrossing(&[vec![1, 3]]).is_err());
        assert!(NcPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
    }

    #[test]
    fn restriction() {
        let w = Word::new(vec![1, 2, 1]).unwrap();
        let r = restrict_word(&w, &part("{1,3}{2}")).unwrap();
        assert_eq!(r, vec![Word::new(vec![1, 1]).unwrap(), Word::new(vec![2]).unwrap()]);
        assert_eq!(restrict_word(&w, &NcPartition::full(3)).unwrap(), vec![w.clone()]);
        let w2 = Word::new(vec![1, 1]).unwrap();
        assert_eq!(restrict_word(&w2, &NcPartition::discrete(2)).unwrap().len(), 2);
        assert!(restrict_word(&w2, &NcPartition::full(3)).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(part("{2}{1,3}").to_string(), "{1,3}{2}");
        assert!("{1,3}{2,4}".parse::<NcPartition>().is_err());
        assert!("{1,x}".parse::<NcPartition>().is_err());
    }
}
