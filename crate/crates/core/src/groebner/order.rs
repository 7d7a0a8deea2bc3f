use std::cmp::Ordering;
use std::fmt;

/// A monomial order on exponent vectors.
///
/// `Block` splits the variables into consecutive ranges and compares range
/// by range, which is what elimination needs: put the variables to be
/// eliminated in the first block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Weighted degree first, ties broken by reverse lex. Weights must be
    /// positive for this to be a well-order on its own; inside a block order
    /// zero weights are fine as long as ties are broken.
    WeightedGrevlex(Vec<u32>),
    Block(Vec<(usize, MonomialOrder)>),
}

fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Elimination order: grevlex on the first `k` variables, then grevlex on
    /// the remaining `n - k`.
    pub fn elimination(k: usize, n: usize) -> MonomialOrder {
        MonomialOrder::Block(vec![(k, MonomialOrder::Grevlex), (n - k, MonomialOrder::Grevlex)])
    }

    /// Like [`MonomialOrder::elimination`] but each block is graded by the
    /// given weights (restricted to the block).
    pub fn weighted_elimination(k: usize, weights: &[u32]) -> MonomialOrder {
        let n = weights.len();
        MonomialOrder::Block(vec![
            (k, MonomialOrder::WeightedGrevlex(weights[..k].to_vec())),
            (n - k, MonomialOrder::WeightedGrevlex(weights[k..].to_vec())),
        ])
    }

    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().map(|&x| x as u32).sum();
                let db: u32 = b.iter().map(|&x| x as u32).sum();
                da.cmp(&db).then_with(|| revlex_tail(a, b))
            }
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::WeightedGrevlex(w) => {
                let da: u64 = a.iter().zip(w).map(|(&x, &w)| x as u64 * w as u64).sum();
                let db: u64 = b.iter().zip(w).map(|(&x, &w)| x as u64 * w as u64).sum();
                da.cmp(&db).then_with(|| {
                    let ta: u32 = a.iter().map(|&x| x as u32).sum();
                    let tb: u32 = b.iter().map(|&x| x as u32).sum();
                    ta.cmp(&tb)
                })
                .then_with(|| revlex_tail(a, b))
            }
            MonomialOrder::Block(blocks) => {
                let mut s = 0;
                for (len, o) in blocks {
                    let c = o.cmp(&a[s..s + len], &b[s..s + len]);
                    if c != Ordering::Equal {
                        return c;
                    }
                    s += len;
                }
                Ordering::Equal
            }
        }
    }

    /// Number of leading variables of an elimination block order, if any.
    pub fn eliminated_prefix(&self) -> Option<usize> {
        match self {
            MonomialOrder::Block(b) if b.len() >= 2 => Some(b[0].0),
            _ => None,
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::WeightedGrevlex(w) => write!(f, "wgrevlex{w:?}"),
            MonomialOrder::Block(b) => {
                write!(f, "block(")?;
                for (i, (n, o)) in b.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{n}:{o:?}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > xz in grevlex with x > y > z
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 1, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 0, 3], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        let o = MonomialOrder::elimination(1, 3);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2, 0], &[0, 1, 1]), Ordering::Greater);
    }
}
