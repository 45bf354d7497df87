// Writing a point, reading it back, and reporting validation failures.

use nested_quot::classify::enumerate_fixed_points;
use nested_quot::linalg::ratio;
use nested_quot::point_file::{read_nested, write_nested, PointFile};

pub fn run_example() -> nested_quot::Result<String> {
    let fp = &enumerate_fixed_points(2, 1, &[1, 3])?[1];
    let z = fp.to_nested_point()?.translate(&[ratio(1, 2), ratio(-2, 3)]);
    let text = write_nested(&z);
    print!("{text}");
    assert_eq!(read_nested(&text)?, z);

    let broken = text.replacen("framing\n1\n", "framing\n0\n", 1);
    match PointFile::parse(&broken)?.to_nested() {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected edited file: {e}"),
    }
    match PointFile::parse(&text.replace("1/2", "1/x")) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected malformed entry: {e}"),
    }
    Ok(text)
}

#[allow(dead_code)]
fn main() -> nested_quot::Result<()> {
    run_example().map(|_| ())
}
