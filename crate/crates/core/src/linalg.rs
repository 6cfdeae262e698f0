//! Rank of finitely many sparse vectors over `Q`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rational;

/// Rank of the span of `vectors`, by Gaussian elimination keyed on the
/// largest remaining coordinate of each vector.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = BTreeMap<K, Rational>>) -> usize {
    let mut pivots: BTreeMap<K, BTreeMap<K, Rational>> = BTreeMap::new();
    for mut v in vectors {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((key, lead)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                break;
            };
            match pivots.get(&key) {
                Some(p) => {
                    let factor = &lead / &p[&key];
                    for (k, c) in p {
                        let entry = v.entry(k.clone()).or_insert_with(Rational::zero);
                        *entry -= &factor * c;
                        if entry.is_zero() {
                            v.remove(k);
                        }
                    }
                }
                None => {
                    pivots.insert(key, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}
