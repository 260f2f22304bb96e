use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdin = std::io::stdin().lock();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = tiled_orders::cli::run(&args, &mut stdin, &mut stdout.lock(), &mut stderr.lock());
    let _ = stdout.lock().flush();
    std::process::exit(code);
}
