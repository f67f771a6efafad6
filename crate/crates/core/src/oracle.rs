//! Slow reference implementations built straight from the definitions, used to
//! cross-check the fast kernels.
//!
//! Set partitions come from restricted growth strings, non-crossing is tested on
//! all quadruples, and the Kreweras complement is found as the coarsest partition
//! of the primed points `1' < 2' < ⋯` (interleaved as `1 < 1' < 2 < 2' < ⋯`) whose
//! union with `π` stays non-crossing.

use crate::error::Result;
use crate::ncpart::NcPartition;
use crate::ring::Coeff;
use crate::series::{all_words, TruncSeries};

/// Every set partition of `{1..n}`, as 1-based blocks.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = rgs.len();
        if i == n {
            let k = rgs.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); k];
            for (pos, &b) in rgs.iter().enumerate() {
                blocks[b].push(pos + 1);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max {
            rgs[i] = b;
            rec(i + 1, if b == max { max + 1 } else { max }, rgs, out);
        }
    }
    if n > 0 {
        rgs[0] = 0;
        rec(1, 1, &mut rgs, &mut out);
    }
    out
}

/// Crossing test straight from the definition on a labelled point set.
fn crossing_free(labels: &[usize]) -> bool {
    let n = labels.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if labels[a] != labels[c] || labels[a] == labels[b] {
                    continue;
                }
                for d in c + 1..n {
                    if labels[b] == labels[d] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn labels_of(n: usize, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut labels = vec![0; n];
    for (k, b) in blocks.iter().enumerate() {
        for &p in b {
            labels[p - 1] = k;
        }
    }
    labels
}

/// Non-crossing partitions of `{1..n}` by filtering all set partitions.
pub fn nc_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    set_partitions(n)
        .into_iter()
        .filter(|p| crossing_free(&labels_of(n, p)))
        .collect()
}

/// `K(π)` as the coarsest compatible partition of the primed points.
pub fn kreweras(n: usize, pi: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let pl = labels_of(n, pi);
    let offset = pi.len();
    let mut best: Option<Vec<Vec<usize>>> = None;
    for sigma in set_partitions(n) {
        if best.as_ref().is_some_and(|b| b.len() <= sigma.len()) {
            continue;
        }
        let sl = labels_of(n, &sigma);
        let mut joint = Vec::with_capacity(2 * n);
        for i in 0..n {
            joint.push(pl[i]);
            joint.push(offset + sl[i]);
        }
        if crossing_free(&joint) {
            best = Some(sigma);
        }
    }
    best.expect("the discrete partition is always compatible")
}

/// `f ⊠ g` summed over brute-force `NC(n)` with brute-force complements.
pub fn box_conv<R: Coeff>(f: &TruncSeries<R>, g: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    let (s, order, ring) = (f.s(), f.order(), f.ring());
    let mut out = TruncSeries::zero(s, order, ring)?;
    for n in 1..=order {
        let pairs: Vec<(NcPartition, NcPartition)> = nc_partitions(n)
            .into_iter()
            .map(|p| {
                let k = kreweras(n, &p);
                (NcPartition::new(n, p).expect("nc"), NcPartition::new(n, k).expect("nc"))
            })
            .collect();
        for w in all_words(s, n).filter(|w| w.len() == n) {
            let mut acc = R::zero(&ring);
            for (p, k) in &pairs {
                acc += &(f.coeff_block_product(&w, p)? * &g.coeff_block_product(&w, k)?);
            }
            out.set(&w, acc)?;
        }
    }
    Ok(out)
}

/// `Σ_{π ∈ NC} r_{w,π}`: moments from cumulants without the Zeta series.
pub fn moments_from_cumulants<R: Coeff>(r: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    let (s, order, ring) = (r.s(), r.order(), r.ring());
    let mut out = TruncSeries::zero(s, order, ring)?;
    for n in 1..=order {
        let parts: Vec<NcPartition> =
            nc_partitions(n).into_iter().map(|p| NcPartition::new(n, p).expect("nc")).collect();
        for w in all_words(s, n).filter(|w| w.len() == n) {
            let mut acc = R::zero(&ring);
            for p in &parts {
                acc += &r.coeff_block_product(&w, p)?;
            }
            out.set(&w, acc)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpart::{enumerate_nc, kreweras as fast_kreweras};

    #[test]
    fn bell_and_catalan() {
        let bell: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 2, 5, 15, 52, 203]);
        let cat: Vec<usize> = (1..=7).map(|n| nc_partitions(n).len()).collect();
        assert_eq!(cat, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn agrees_with_fast_kreweras() {
        for n in 1..=6 {
            for p in enumerate_nc(n).unwrap() {
                let k = kreweras(n, p.blocks());
                assert_eq!(NcPartition::new(n, k).unwrap(), fast_kreweras(&p));
            }
        }
    }
}
