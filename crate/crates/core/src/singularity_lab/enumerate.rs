use crate::graph_model::MultipartiteSpec;

/// Every ordered composition `(n_1, .., n_m)` with `m >= 2` and total at most `max_total`.
pub fn compositions_up_to(max_total: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        for n in 1..=left {
            prefix.push(n);
            extend(prefix, left - n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_total, &mut out);
    out.sort_by(|a, b| (a.iter().sum::<usize>(), a.len(), a).cmp(&(b.iter().sum(), b.len(), b)));
    out
}

/// Non-decreasing sequences of length `m` with entries in `1..=max_part`.
pub fn sorted_specs(m: usize, max_part: usize) -> Vec<MultipartiteSpec> {
    fn extend(prefix: &mut Vec<usize>, m: usize, max_part: usize, out: &mut Vec<MultipartiteSpec>) {
        if prefix.len() == m {
            out.push(MultipartiteSpec::new(prefix.clone()).expect("m >= 2 and positive parts"));
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for n in lo..=max_part {
            prefix.push(n);
            extend(prefix, m, max_part, out);
            prefix.pop();
        }
    }
    assert!(m >= 2, "specs need at least two parts");
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(m), m, max_part, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // Compositions of N into at least two parts: 2^{N-1} - 1.
        let all = compositions_up_to(6);
        let expected: usize = (2..=6).map(|n| (1usize << (n - 1)) - 1).sum();
        assert_eq!(all.len(), expected);
        assert_eq!(sorted_specs(3, 4).len(), 20);
        assert_eq!(
            sorted_specs(2, 3).iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["1,1", "1,2", "1,3", "2,2", "2,3", "3,3"]
        );
    }
}
