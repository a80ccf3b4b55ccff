//! Words over `{0, …, n-1}` and the pair matrices they define.

use crate::combinat::MarginMatrix;

/// `C[i][j] = #{t : u_t = i, w_t = j}`.
pub fn pair_matrix(n: usize, u: &[usize], w: &[usize]) -> MarginMatrix {
    let mut c = MarginMatrix::zeros(n, n);
    for (&i, &j) in u.iter().zip(w) {
        c.set(i, j, c.get(i, j) + 1);
    }
    c
}

/// The sorted word with content `mu`.
pub fn sorted_word(mu: &[usize]) -> Vec<usize> {
    mu.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i).take(m)).collect()
}

/// Position of a word in the tensor basis of `(k^n)^{⊗d}`, first letter most
/// significant.
pub fn word_index(n: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &x| acc * n + x)
}

pub fn index_word(n: usize, d: usize, mut idx: usize) -> Vec<usize> {
    let mut w = vec![0; d];
    for t in (0..d).rev() {
        w[t] = idx % n;
        idx /= n;
    }
    w
}

/// In-place lexicographic successor; false once the last arrangement is
/// reached.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct arrangements of the multiset with multiplicities `content`.
pub fn arrangements(content: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted_word(content);
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// All words `u` with `pair_matrix(u, w) = m`.
pub fn words_over(w: &[usize], m: &MarginMatrix) -> Vec<Vec<usize>> {
    let n = m.ncols();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, &j) in w.iter().enumerate() {
        blocks[j].push(t);
    }
    let mut out = vec![vec![0; w.len()]];
    for j in 0..n {
        if blocks[j].len() != m.column(j).iter().sum::<usize>() {
            return vec![];
        }
        if blocks[j].is_empty() {
            continue;
        }
        let arr = arrangements(&m.column(j));
        let mut next = Vec::with_capacity(out.len() * arr.len());
        for u in &out {
            for a in &arr {
                let mut u = u.clone();
                for (&t, &x) in blocks[j].iter().zip(a) {
                    u[t] = x;
                }
                next.push(u);
            }
        }
        out = next;
    }
    out
}
