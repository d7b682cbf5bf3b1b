fn main() {
    std::process::exit(integer_triangles::cli::run(std::env::args_os()));
}
