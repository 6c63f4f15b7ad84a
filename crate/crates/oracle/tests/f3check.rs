use oracle::{brute_longest, SearchBudget};

fn longest(m: i32, n: i32, s: (i32, i32), t: (i32, i32)) -> usize {
    brute_longest(m, n, s, t, &SearchBudget::default()).unwrap().len()
}

#[test]
fn f3_core_check() {
    println!("3x4 (2,1)->(2,2): brute={}", longest(3, 4, (2, 1), (2, 2)));
    println!("5x4 (2,1)->(2,2): brute={}", longest(5, 4, (2, 1), (2, 2)));
    println!("3x2 (2,1)->(2,2): brute={}", longest(3, 2, (2, 1), (2, 2)));
    println!("5x2 (2,1)->(2,2): brute={}", longest(5, 2, (2, 1), (2, 2)));
    println!("3x6 (2,1)->(2,2): brute={}", longest(3, 6, (2, 1), (2, 2)));
}
