use cliffkit_demo::{betti_numbers, classification_table, reflections};
use serde_json::Value;

#[test]
fn table_rows_agree() {
    let rows: Value = serde_json::from_str(&classification_table(4).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 15);
    for row in rows {
        assert_eq!(row["classified"], row["compiled"]);
        assert_eq!(row["relations"], true);
    }
    assert!(classification_table(9).is_err());
}

#[test]
fn boost_needs_two_reflections() {
    let boost = r#"[["5/3","4/3"],["4/3","5/3"]]"#;
    let out: Value = serde_json::from_str(&reflections(1, 1, boost).unwrap()).unwrap();
    assert_eq!(out["reflections"].as_array().unwrap().len(), 2);
    assert_eq!(out["recomposed"], true);
    assert_eq!(out["determinant"], "1");
}

#[test]
fn rejects_non_orthogonal_input() {
    assert!(reflections(2, 0, r#"[["1","1"],["0","1"]]"#).is_err());
    assert!(reflections(2, 0, "not json").is_err());
}

#[test]
fn projective_plane_betti() {
    let rp2 = r#"{"vertices":6,"simplices":{"2":[[0,1,2],[0,2,3],[0,3,4],[0,4,5],[0,1,5],[1,2,4],[2,3,5],[1,3,4],[1,3,5],[2,4,5]]}}"#;
    let out: Value = serde_json::from_str(&betti_numbers(rp2).unwrap()).unwrap();
    assert_eq!(out["betti"], serde_json::json!([1, 1, 1, 0]));
    assert_eq!(out["euler"], 1);
}
