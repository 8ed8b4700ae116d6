//! Bundled example graphs.
//!
//! Each catalog graph is stored in the text format. For THETA2, FIG-NG and
//! FIG-NH the reference orientation of the file is the distinguished totally
//! cyclic orientation studied in the guide, so `Orientation::reference` gives
//! that chamber directly.

use crate::graph::Graph;

pub const TREE3: &str = include_str!("../catalog/tree3.graph");
pub const LOOP1: &str = include_str!("../catalog/loop1.graph");
pub const B2: &str = include_str!("../catalog/b2.graph");
pub const B3: &str = include_str!("../catalog/b3.graph");
pub const THETA2: &str = include_str!("../catalog/theta2.graph");
pub const FIG_NG: &str = include_str!("../catalog/fig_ng.graph");
pub const FIG_NH: &str = include_str!("../catalog/fig_nh.graph");

fn parse(text: &str) -> Graph {
    Graph::parse(text).expect("bundled catalog graphs parse")
}

pub fn tree3() -> Graph {
    parse(TREE3)
}

pub fn loop1() -> Graph {
    parse(LOOP1)
}

pub fn b2() -> Graph {
    parse(B2)
}

pub fn b3() -> Graph {
    parse(B3)
}

pub fn theta2() -> Graph {
    parse(THETA2)
}

pub fn fig_ng() -> Graph {
    parse(FIG_NG)
}

pub fn fig_nh() -> Graph {
    parse(FIG_NH)
}

/// The cycle graph `C_n` with edges `e1..en`, `ei: i → i+1`, closing at `n → 1`.
/// `cycle(1)` is a loop and `cycle(2)` is a double edge.
pub fn cycle(n: usize) -> Graph {
    let spec: Vec<(String, String, String)> = (1..=n)
        .map(|i| {
            let next = if i == n { 1 } else { i + 1 };
            (format!("e{i}"), i.to_string(), next.to_string())
        })
        .collect();
    Graph::from_edge_list(&spec).expect("cycle edge ids are distinct")
}

/// Catalog names in display order.
pub const NAMES: [&str; 12] = [
    "TREE3", "LOOP1", "B2", "B3", "C3", "C4", "C5", "C6", "C7", "THETA2", "FIG-NG", "FIG-NH",
];

/// Looks up a catalog graph by name (case-insensitive).
pub fn by_name(name: &str) -> Option<Graph> {
    let upper = name.to_ascii_uppercase();
    match upper.as_str() {
        "TREE3" => Some(tree3()),
        "LOOP1" => Some(loop1()),
        "B2" => Some(b2()),
        "B3" => Some(b3()),
        "THETA2" => Some(theta2()),
        "FIG-NG" => Some(fig_ng()),
        "FIG-NH" => Some(fig_nh()),
        _ => {
            let n: usize = upper.strip_prefix('C')?.parse().ok()?;
            (3..=7).contains(&n).then(|| cycle(n))
        }
    }
}

/// Every catalog graph with its name.
pub fn all() -> Vec<(&'static str, Graph)> {
    NAMES
        .iter()
        .map(|&n| (n, by_name(n).expect("catalog names resolve")))
        .collect()
}
