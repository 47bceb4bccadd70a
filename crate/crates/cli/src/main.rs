use ringshaped_cli::{run_from, EPS0_ENV};

fn main() {
    let eps0 = std::env::var(EPS0_ENV).ok();
    let code = run_from(
        std::env::args_os(),
        eps0.as_deref(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
