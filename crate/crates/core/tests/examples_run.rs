#[allow(dead_code)]
#[path = "../examples/solve_petersen.rs"]
mod solve_petersen;
#[allow(dead_code)]
#[path = "../examples/kempe_chains.rs"]
mod kempe_chains;
#[allow(dead_code)]
#[path = "../examples/oracle_cross_check.rs"]
mod oracle_cross_check;
#[allow(dead_code)]
#[path = "../examples/channel_assignment.rs"]
mod channel_assignment;
#[allow(dead_code)]
#[path = "../examples/dimacs_roundtrip.rs"]
mod dimacs_roundtrip;
#[allow(dead_code)]
#[path = "../examples/lower_bound.rs"]
mod lower_bound;

#[test]
fn solve_petersen_runs() {
    solve_petersen::run_example().expect("solve_petersen example");
}

#[test]
fn kempe_chains_runs() {
    kempe_chains::run_example().expect("kempe_chains example");
}

#[test]
fn oracle_cross_check_runs() {
    oracle_cross_check::run_example().expect("oracle_cross_check example");
}

#[test]
fn channel_assignment_runs() {
    channel_assignment::run_example().expect("channel_assignment example");
}

#[test]
fn dimacs_roundtrip_runs() {
    dimacs_roundtrip::run_example().expect("dimacs_roundtrip example");
}

#[test]
fn lower_bound_runs() {
    lower_bound::run_example().expect("lower_bound example");
}
