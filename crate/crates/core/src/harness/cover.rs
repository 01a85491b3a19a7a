use std::collections::{BTreeMap, BTreeSet};

/// Repeatedly pick the strategy adding the most unsolved problems, ties by
/// name. Returns up to `k` picks with their marginal additions.
pub fn greedy_cover(solved: &BTreeMap<String, BTreeSet<String>>, k: usize) -> Vec<(String, usize)> {
    let mut covered: BTreeSet<&String> = BTreeSet::new();
    let mut left: Vec<&String> = solved.keys().collect();
    let mut out = Vec::new();
    while out.len() < k && !left.is_empty() {
        let mut best = 0;
        let mut best_gain = 0;
        for (i, s) in left.iter().enumerate() {
            let gain = solved[*s].iter().filter(|p| !covered.contains(p)).count();
            if gain > best_gain {
                best = i;
                best_gain = gain;
            }
        }
        let s = left.remove(best);
        covered.extend(solved[s].iter());
        out.push((s.clone(), best_gain));
    }
    out
}
