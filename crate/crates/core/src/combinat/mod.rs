//! Partitions, compositions, tableaux and matrices with prescribed margins.

pub mod margin;
pub mod partition;
pub mod tableau;

pub use margin::{margin_matrices, matrices_of_total, MarginMatrix};
pub use partition::{
    compositions, dominance_leq, lex_cmp, lex_predecessor, lex_successor, parse_composition, partitions, sigma_perm,
    Composition, Partition,
};
pub use tableau::{hook_content_dim, kostka, semistandard_tableaux, tableaux, Filling};

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// `(Σ parts)! / Π parts!`
pub fn multinomial(parts: &[usize]) -> u64 {
    let mut total = 0;
    let mut acc: u64 = 1;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}
