window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","cell-solver.html#harmonic-splines-and-the-cell-solver","cell-solver.html#the-quadratic-defect-identity","cell-solver.html#global-assembly","green-and-torsion.html#the-green-kernel-and-the-torsion-function","green-and-torsion.html#production-series","green-and-torsion.html#oracles","partitions.html#adaptive-partitions","partitions.html#structural-guarantees","error-and-constant.html#error-measurement-and-the-sharp-constant","error-and-constant.html#the-exact-constant-laplacian-case","error-and-constant.html#the-variable-laplacian-limit","cli.html#the-command-line-runner","cli.html#subcommands","cli.html#configuration","cli.html#reports"],"index":{"documentStore":{"docInfo":{"0":{"body":274,"breadcrumbs":2,"title":1},"1":{"body":142,"breadcrumbs":8,"title":4},"10":{"body":65,"breadcrumbs":8,"title":4},"11":{"body":99,"breadcrumbs":7,"title":3},"12":{"body":57,"breadcrumbs":6,"title":3},"13":{"body":72,"breadcrumbs":4,"title":1},"14":{"body":74,"breadcrumbs":4,"title":1},"15":{"body":80,"breadcrumbs":4,"title":1},"2":{"body":107,"breadcrumbs":7,"title":3},"3":{"body":45,"breadcrumbs":6,"title":2},"4":{"body":24,"breadcrumbs":8,"title":4},"5":{"body":134,"breadcrumbs":6,"title":2},"6":{"body":74,"breadcrumbs":5,"title":1},"7":{"body":194,"breadcrumbs":4,"title":2},"8":{"body":81,"breadcrumbs":4,"title":2},"9":{"body":64,"breadcrumbs":8,"title":4}},"docs":{"0":{"body":"This crate approximates a twice continuously differentiable function f : [0,1]² → ℝ by a harmonic spline: a continuous surface that is harmonic\\ninside every cell of a box partition and agrees with f on every cell\\nboundary. Interpolation on the whole boundary network, rather than at isolated\\nnodes, is what makes the construction interesting: inside a cell the\\napproximant is the unique solution of a Laplace equation with the trace of f\\nas Dirichlet data, so the local error is governed entirely by how far f is\\nfrom being harmonic there. That observation has a precise quantitative form. On a square cell Ω and for\\na quadratic Q = Ax₁² + Bx₂² the interpolation defect is an exact multiple of\\nthe torsion function I of the square (the solution of ΔI = −1 with zero\\nboundary values): u(Q) − Q = 2(A + B)·|Ω|·I(ξ), ‖Q − u(Q)‖_p = 2|A + B|·|Ω|^{1+1/p}·‖I‖_p Summing this local law over a partition tuned to the size of |Δf| yields the\\nsharp asymptotic behaviour of the global error. For partitions of N elements\\nbuilt by the two-stage scheme in this crate, lim N · ‖f − s‖_{L_p} = ‖I‖_{L_p} · ‖Δf‖_{L_{p/(p+1)}}\\nN→∞ and no other partition sequence does asymptotically better. The right-hand\\nside is fully computable, which turns the limit into a testable prediction:\\nbuild partitions, fit splines, measure errors, and watch N·error converge to\\nthe constant. The crate ships the pieces to do exactly that: green_kernel: the Dirichlet Green’s function of the unit square, the\\ntorsion function I, and its L_p norms; harmonic_solver: the per-cell Dirichlet solver (bilinear part plus four\\nsine/sinh edge series); functions: a registry of analytic test fields with exact derivatives, and\\ningestion of gridded data; partition: the two-stage adaptive partition (block grid, budget\\nallocation, meshing into squares plus boundary rectangles); spline: global assembly and evaluation; error_metrics: L_p errors, the ‖Δf‖_{p/(p+1)} quasi-norm, and the\\nlimiting constant; a CLI ( harmonic-splines) that sweeps budgets and writes deterministic\\nCSV/JSON reports. A complete round trip in a dozen lines: #![allow(unused)] fn main() {\\nuse harmonic_splines::functions::registry_get;\\nuse harmonic_splines::green_kernel::SeriesTruncation;\\nuse harmonic_splines::partition::{build_partition, PartitionOptions};\\nuse harmonic_splines::spline::fit;\\nuse harmonic_splines::error_metrics::{asymptotic_constant, lp_error};\\nuse harmonic_splines::quadrature::QuadratureSpec; let f = registry_get(\\"quartic\\")?;\\nlet part = build_partition(&f, 1024, 2.0, &PartitionOptions::default())?;\\nlet model = fit(&f, part, &SeriesTruncation::default())?;\\nlet err = lp_error(&f, &model, 2.0, &QuadratureSpec::default())?;\\nlet constant = asymptotic_constant(&f, 2.0)?;\\nlet ratio = 1024.0 * err.total_p_norm / constant;\\nassert!(ratio > 0.8 && ratio < 1.5, \\"N·error/constant = {ratio}\\"); Ok::<(), harmonic_splines::Error>(()) } The same snippet is the doc-test on the crate root, so it is compiled and run\\nby cargo test; every code block in this book mirrors a doc-test in the\\nsources for the same reason.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"harmonic_solver::solve_cell solves one Dirichlet problem: given a field f\\nand an axis-aligned rectangle, find the harmonic function matching the trace\\nof f on all four edges. The solution is stored as the bilinear function interpolating the four corner values, plus four one-sided series, one per edge, each harmonic with zero data on the\\nother three edges. For the bottom edge of a cell of width w and height h the series is Σ_k b_k · sin(kπ t) · sinh(kπ ρ (1 − d)) / sinh(kπ ρ), ρ = h / w with t the normalized position along the edge and d the normalized\\ndistance from it. The coefficients b_k are the sine coefficients of the edge\\ntrace minus the bilinear part; subtracting corners first makes the residual\\nvanish at the edge endpoints, so the coefficients decay like k⁻³ and the\\ntruncated series converges uniformly. All sinh ratios are evaluated through\\ndecaying exponentials, so large mode numbers cannot overflow, and the\\noscillatory coefficient integrals use a composite Gauss–Legendre rule with\\nfour nodes per period of the highest retained mode. Every stored term is exactly harmonic. Truncation error therefore lives only\\non the cell boundary: points in the interior feel it damped by e^{−πk·depth}, which is why evaluation deep inside a cell is accurate to\\nnear machine precision even with modest mode counts.","breadcrumbs":"Harmonic splines and the cell solver » Harmonic splines and the cell solver","id":"1","title":"Harmonic splines and the cell solver"},"10":{"body":"When Δf is constant no limit is needed: the local defect law holds exactly\\non every cell, and summing over N equal cells of area 1/N gives ‖f − s‖_p = 4‖I‖_p / N for f = x² + y² at every budget: #![allow(unused)] fn main() {\\nuse harmonic_splines::error_metrics::{lp_error, norm_i_reference};\\nuse harmonic_splines::functions::registry_get;\\nuse harmonic_splines::green_kernel::SeriesTruncation;\\nuse harmonic_splines::partition::uniform_partition;\\nuse harmonic_splines::quadrature::QuadratureSpec;\\nuse harmonic_splines::spline::fit; let f = registry_get(\\"quadratic\\")?;\\nlet model = fit(&f, uniform_partition(100)?, &SeriesTruncation::new(64, 0.0)?)?;\\nlet err = lp_error(&f, &model, 2.0, &QuadratureSpec::default())?;\\nlet want = 4.0 * norm_i_reference(2.0)? / 100.0;\\nassert!(((err.total_p_norm - want) / want).abs() < 1e-3); Ok::<(), harmonic_splines::Error>(()) }","breadcrumbs":"Error measurement and the sharp constant » The exact constant-Laplacian case","id":"10","title":"The exact constant-Laplacian case"},"11":{"body":"For f = x⁴ + y⁴ with p = 2 and m = ⌈N^{1/4}⌉, the acceptance suite\\nsweeps N from 16² to 256² and watches the ratio N·error / constant\\napproach 1 monotonically; a representative run gives N 256 1024 4096 16384 65536\\nratio 0.912 0.948 0.965 0.974 0.983 The residual gap at finite N is the element-count envelope (1 + 2m/√N + m²/N)^{1/p} together with the within-block variation of Δf;\\nboth vanish as N grows. Two degenerate directions complete the picture. A harmonic field is its own\\nspline, so the error is pure series tolerance (below 1e-8 in sup norm) and\\nreports show the exact sentinel instead of a 0/0 ratio. And for fields with\\nstrongly varying |Δf|, the adaptive partition beats the uniform baseline of\\nthe same budget — the Hölder gap between ‖Δf‖_{p/(p+1)} and the uniform-grid\\nconstant is exactly what the allocation harvests.","breadcrumbs":"Error measurement and the sharp constant » The variable-Laplacian limit","id":"11","title":"The variable-Laplacian limit"},"12":{"body":"The harmonic-splines binary wraps the library in a batch experiment runner. harmonic-splines converge --field quartic --p 2 --n 256 --n 1024 --n 4096\\nharmonic-splines compare --field bump --p 1 --n 16384\\nharmonic-splines dump-partition --field quartic --budget 2048 --norm 2\\nharmonic-splines dump-spline --field klim --budget 1024 --resolution 201\\nharmonic-splines constants --p 1 --p 2","breadcrumbs":"The command-line runner » The command-line runner","id":"12","title":"The command-line runner"},"13":{"body":"converge — for each (p, N) pair: build the adaptive partition, fit the\\nspline, measure the L_p error, and emit a CSV row with the ratio N·error / constant. Also writes per-run partition dumps. compare — paired adaptive/uniform rows for the same budgets; budgets must\\nbe perfect squares so the uniform baseline exists. dump-partition — the cell list of one partition in a plain-text format\\n( block kind x0 y0 w h per line). dump-spline — a fitted spline sampled on an r × r lattice, in the same\\nformat the --grid loader accepts. constants — the ‖I‖_p table for the configured norm indices.","breadcrumbs":"The command-line runner » Subcommands","id":"13","title":"Subcommands"},"14":{"body":"All knobs live in a TOML file passed with --config; every field can be\\noverridden by a flag of the same name. A minimal file: field = \\"quartic\\" # or: grid = \\"surface.txt\\"\\np_list = [1.0, 2.0]\\nn_list = [256, 1024, 4096]\\nmax_mode = 64\\ntail_tol = 1e-10\\nnodes_per_cell_axis = 12\\noutput_dir = \\"reports\\" Validation is strict: n_list must be strictly increasing, every p must be\\nat least 1, and the block-rule exponent gamma must lie in (0, 0.5).\\nFailures exit nonzero with a one-line diagnostic on stderr. The block count per axis defaults to m = ⌈N^{1/4}⌉; --forced-m pins it, --gamma changes the exponent, and --auto-m derives it from the sampled\\nsmoothness modulus instead.","breadcrumbs":"The command-line runner » Configuration","id":"14","title":"Configuration"},"15":{"body":"converge and compare write two files into output_dir and echo the CSV to\\nstdout: <stem>.csv with the columns variant,p,n_target,total_cells,m,rectangle_count,error,n_error,theorem1_constant,ratio.\\nThe ratio is normalized by the budget N (which the continuous allocation\\nspends exactly), not by the realized cell count; total_cells is reported\\nalongside for the element-count audit. When the constant vanishes (harmonic\\nfields) the ratio column carries the sentinel exact. <stem>_provenance.json with every tolerance-bearing parameter and a\\nSHA-256 hash of the resolved configuration. Output is deterministic: floats are fixed-precision, nothing embeds a\\ntimestamp, and an identical configuration reproduces the report byte for\\nbyte. The integration tests assert this by running the binary twice and\\ncomparing the files. Cell solves and error quadrature parallelize over cells; set HARMONIC_SPLINES_WORKERS to cap the worker pool.","breadcrumbs":"The command-line runner » Reports","id":"15","title":"Reports"},"2":{"body":"The solver is validated against a closed form. For a pure quadratic Q = Ax₁² + Bx₂², the defect u(Q) − Q has Laplacian −2(A+B) and zero\\nboundary values, so it is exactly 2(A+B)·|Ω|·I(ξ) with I the torsion\\nfunction and ξ the cell-local coordinate: #![allow(unused)] fn main() {\\nuse harmonic_splines::functions::registry_get;\\nuse harmonic_splines::green_kernel::{torsion_i, SeriesTruncation, UnitSquarePoint};\\nuse harmonic_splines::harmonic_solver::{solve_cell, Rect}; let f = registry_get(\\"quadratic\\")?; // x² + y², Δf = 4\\nlet cell = Rect::new(0.0, 0.0, 1.0, 1.0)?;\\nlet sol = solve_cell(&f, cell, &SeriesTruncation::new(128, 0.0)?)?; // u(f) - f = 4·I on the unit cell, since Δ(f - u) = 4 and ΔI = -1\\nlet trunc = SeriesTruncation::new(256, 0.0)?;\\nlet defect = sol.eval(0.3, 0.6)? - f.value(0.3, 0.6);\\nlet torsion = torsion_i(UnitSquarePoint::new(0.3, 0.6)?, &trunc)?;\\nassert!((defect - 4.0 * torsion).abs() < 1e-6); Ok::<(), harmonic_splines::Error>(()) } The test suite extends this with linearity in the boundary data, the maximum\\nprinciple, scale covariance (solving f(α·) on Ω matches solving f on αΩ), and a Richardson check that a discrete five-point Laplacian of the\\nsolution shrinks at the expected O(h²) rate.","breadcrumbs":"Harmonic splines and the cell solver » The quadratic defect identity","id":"2","title":"The quadratic defect identity"},"3":{"body":"spline::fit runs solve_cell over every cell of a partition in parallel;\\nthe cells decouple completely because each one carries its own boundary data.\\nThe resulting SplineModel is continuous across interior edges by\\nconstruction: the two cells sharing an edge interpolate the same trace on it. SplineModel::evaluate locates the owning cell under a half-open membership\\nrule (closed at the domain’s top and right boundaries) and evaluates its local\\nsolution.","breadcrumbs":"Harmonic splines and the cell solver » Global assembly","id":"3","title":"Global assembly"},"4":{"body":"The error theory rests on two classical objects of the unit square: the\\nDirichlet Green’s function G(x; v) and the torsion function I(x) = ∫ G(x; v) dv, the solution of ΔI = −1 with zero boundary values.","breadcrumbs":"The Green kernel and the torsion function » The Green kernel and the torsion function","id":"4","title":"The Green kernel and the torsion function"},"5":{"body":"green_unit_square uses the single-sum representation G(x; v) = Σ_k (2 / kπ) · sin(kπx₁) sin(kπv₁) · sinh(kπ y_<) sinh(kπ (1 − y_>)) / sinh(kπ) where y_< ≤ y_> are the ordered second coordinates. Away from the diagonal\\nthe terms decay like e^{−kπ|x₂ − v₂|}, so the sum converges geometrically;\\nthe doubly-indexed eigenfunction expansion converges only algebraically near\\nthe diagonal and is kept as a test oracle instead. Coincident evaluation and\\nsource points are rejected ( G has a logarithmic singularity there), as is an\\nevaluation point on the boundary. torsion_i uses the odd-mode series I(x) = Σ_{k odd} (4 / k³π³) · sin(kπx₁) · [1 − cosh(kπ(x₂ − ½)) / cosh(kπ/2)] Both series evaluate every sinh/cosh ratio through decaying exponentials, so\\nno mode overflows regardless of the truncation. Two reference values pin the\\nimplementation down: #![allow(unused)] fn main() {\\nuse harmonic_splines::green_kernel::{norm_i, torsion_i, SeriesTruncation, UnitSquarePoint};\\nuse harmonic_splines::quadrature::QuadratureSpec; let trunc = SeriesTruncation::new(128, 0.0)?;\\nlet center = torsion_i(UnitSquarePoint::new(0.5, 0.5)?, &trunc)?;\\nassert!((center - 0.07367).abs() < 5e-5); let norm_1 = norm_i(1.0, &trunc, &QuadratureSpec::default())?;\\nassert!((norm_1 - 0.03514).abs() < 5e-5); Ok::<(), harmonic_splines::Error>(()) } ‖I‖_p is computed by composite Gauss–Legendre quadrature of I^p and cached\\nper (p, truncation, quadrature); every report row reuses the cached value.","breadcrumbs":"The Green kernel and the torsion function » Production series","id":"5","title":"Production series"},"6":{"body":"The test suite checks the production series against independent computations: the double eigenfunction series for I and the closed double series for ∫ I; a 513²-node five-point finite-difference Poisson solve, diagonalized by\\ndiscrete sine transforms, with a discrete point source standing in for the\\ndelta function — this validates G pointwise to 1e-4; the same finite-difference solver on scaled squares [0, α]² for α ∈ {0.5, 2} and on translated squares, which verifies the scaling and\\ntranslation identities G_{αΩ}(x; v) = G_Ω(x/α; v/α) and G_{Ω+d}(x; v) = G_Ω(x−d; v−d); symmetry G(x; v) = G(v; x), nonnegativity, and boundary vanishing, both on\\nfixed lattices and under randomized sampling.","breadcrumbs":"The Green kernel and the torsion function » Oracles","id":"6","title":"Oracles"},"7":{"body":"The partition that realizes the sharp constant is built in two stages. Stage one: blocks. The unit square is cut into m × m equal blocks. m\\ngrows slowly with the budget N (the requirement is only m² = o(N)), so\\neach block is small enough that |Δf| is nearly constant on it. Each block\\nrecords that local value, M_l = |Δf(center)|. By default m is chosen from\\na sampled modulus of continuity of the second derivatives\\n( choose_m), capped so m² ≤ N; experiments normally pin it with forced_m (the CLI default is m = ⌈N^{1/4}⌉) so results do not depend on\\nthe modulus estimator. Stage two: allocation and meshing. The budget is split over blocks by the\\nLagrange-multiplier formula ñ_l² = N · M_l^{p/(p+1)} / Σ_i M_i^{p/(p+1)} which minimizes the summed local error law from the cell-solver chapter\\nsubject to Σ ñ_l² = N. Blocks with vanishing M_l are floored at a tiny\\npositive weight so they still receive cells. Each block is then meshed with n_l = ⌊ñ_l⌋ rows and columns of squares of side block_side / ñ_l, plus 2n_l + 1 boundary rectangles filling the right and top strips when ñ_l is\\nnot an integer. The rectangles are what make the count come out right; their\\nshare of the cells shrinks as N grows, so asymptotically the partition is\\nsquare-dominated. A budget below one square (possible only when the m² ≤ N\\ncap binds) collapses the block to a single cell. #![allow(unused)] fn main() {\\nuse harmonic_splines::functions::registry_get;\\nuse harmonic_splines::partition::{build_partition, PartitionOptions}; let f = registry_get(\\"quartic\\")?;\\nlet opts = PartitionOptions { forced_m: Some(6), ..Default::default() };\\nlet part = build_partition(&f, 2048, 2.0, &opts)?; // the continuous budgets always spend exactly N\\nassert!((part.n_tilde_total() - 2048.0).abs() < 1e-6);\\n// the cells tile the unit square\\nlet area: f64 = part.cells().map(|c| c.rect.area()).sum();\\nassert!((area - 1.0).abs() < 1e-12); Ok::<(), harmonic_splines::Error>(()) }","breadcrumbs":"Adaptive partitions » Adaptive partitions","id":"7","title":"Adaptive partitions"},"8":{"body":"The acceptance suite audits every build for: exact tiling (areas sum to 1, every cell owns its center under the\\nhalf-open membership rule); Σ ñ_l² = N to relative 1e-9; the per-block sandwich n_l ≤ ñ_l < n_l + 1; the global element-count envelope N − 2m√N ≤ Σ (n_l + 1)² ≤ N + 2m√N + m²; a rectangle fraction that decreases as N grows at fixed m. It also checks optimality of the allocation itself: on a synthetic three-block\\ninstance the closed-form ñ_l beats one hundred random feasible allocations\\non the objective, strictly, in every trial. uniform_partition(N) provides the √N × √N baseline used by the\\nadaptive-versus-uniform comparisons; it requires N to be a perfect square.","breadcrumbs":"Adaptive partitions » Structural guarantees","id":"8","title":"Structural guarantees"},"9":{"body":"error_metrics::lp_error integrates |f − s|^p cell by cell with a tensor\\nGauss–Legendre rule and reports both the global L_p norm and the per-block\\npower contributions. The integrand is analytic inside each cell (both f and\\nthe local solution are), so a 12-point rule per axis converges fast; cells are\\nprocessed in parallel. Three quantities make the limit testable: lp_error(f, model, p, quad) — the measured error; laplacian_quasinorm(f, p, quad) — ‖Δf‖_{L_q} with q = p/(p+1) ∈ [½, 1); asymptotic_constant(f, p) — ‖I‖_p · ‖Δf‖_{p/(p+1)}, the value that N·error approaches on the adaptive partitions.","breadcrumbs":"Error measurement and the sharp constant » Error measurement and the sharp constant","id":"9","title":"Error measurement and the sharp constant"}},"length":16,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{",":{"1":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},".":{"0":{"3":{"5":{"1":{"4":{")":{".":{"a":{"b":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"3":{"6":{"7":{")":{".":{"a":{"b":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"10":{"tf":1.0},"2":{"tf":1.7320508075688772},"5":{"tf":1.0}}},"5":{"df":3,"docs":{"14":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}},"6":{"df":1,"docs":{"2":{"tf":1.7320508075688772}}},"8":{"df":1,"docs":{"0":{"tf":1.0}}},"9":{"1":{"2":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"4":{"8":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"6":{"5":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"7":{"4":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"8":{"3":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"0":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"14":{"tf":1.0},"6":{"tf":1.0}}},"1":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.4142135623730951}}},"5":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"/":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"0":{"0":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"4":{".":{"0":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}},"2":{"df":3,"docs":{"14":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"6":{"3":{"8":{"4":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"11":{"tf":1.0}}},"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"e":{"df":7,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"2":{"(":{"a":{"+":{"b":{")":{"df":0,"docs":{},"·":{"df":0,"docs":{},"|":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"|":{"df":0,"docs":{},"·":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}},"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},".":{"0":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"0":{"1":{"df":1,"docs":{"12":{"tf":1.0}}},"4":{"8":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"6":{"df":4,"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}},"df":4,"docs":{"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0}},"m":{"/":{"df":0,"docs":{},"√":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{},"√":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}}},"n":{"_":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"|":{"a":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"3":{"df":1,"docs":{"10":{"tf":1.0}}},"4":{".":{"0":{"df":2,"docs":{"10":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{}},"0":{"9":{"6":{"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"2":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"·":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"‖":{"df":0,"docs":{},"i":{"df":0,"docs":{},"‖":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}},"5":{"1":{"3":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"5":{"tf":1.4142135623730951}},"e":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}},"6":{"4":{"df":1,"docs":{"14":{"tf":1.0}}},"5":{"5":{"3":{"6":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.0}}},"8":{"df":1,"docs":{"11":{"tf":1.0}}},"9":{"df":1,"docs":{"8":{"tf":1.0}}},"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}},"k":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}},"l":{"df":2,"docs":{"7":{"tf":2.23606797749979},"8":{"tf":1.7320508075688772}}},"{":{"df":0,"docs":{},"k":{"df":1,"docs":{"5":{"tf":1.0}}}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"d":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"/":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"6":{"tf":1.0}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"c":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"1":{"tf":1.0}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"11":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":3,"docs":{"10":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"(":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"_":{"1":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}},"i":{"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"f":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"u":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":1,"docs":{"14":{"tf":1.0}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"x":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"i":{"df":3,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.0}}}}},"b":{")":{"df":0,"docs":{},"·":{"df":0,"docs":{},"|":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"|":{"df":0,"docs":{},"·":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}}},"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}},"t":{"df":2,"docs":{"11":{"tf":1.0},"8":{"tf":1.0}}}},"df":1,"docs":{"0":{"tf":1.0}},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"11":{"tf":1.0},"7":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"12":{"tf":1.0},"15":{"tf":1.0}}}}},"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"df":7,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"7":{"tf":2.8284271247461903},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"11":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":8,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"x":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"7":{"tf":2.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"&":{"df":0,"docs":{},"f":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}},"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}}},"x":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}},"|":{"df":0,"docs":{},"·":{"df":0,"docs":{},"|":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"|":{"^":{"df":0,"docs":{},"{":{"1":{"+":{"1":{"/":{"df":0,"docs":{},"p":{"df":0,"docs":{},"}":{"df":0,"docs":{},"·":{"df":0,"docs":{},"‖":{"df":0,"docs":{},"i":{"df":0,"docs":{},"‖":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"c":{".":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"(":{")":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"p":{"df":2,"docs":{"15":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"0":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"15":{"tf":1.0},"3":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":10,"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"2":{"tf":2.0},"3":{"tf":2.0},"7":{"tf":2.23606797749979},"8":{"tf":1.0},"9":{"tf":2.0}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"5":{"tf":1.0},"8":{"tf":1.0}}}}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":3,"docs":{"2":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":4,"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":2.0}}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}},"p":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.4142135623730951}}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"2":{"tf":1.0},"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"h":{"(":{"df":0,"docs":{},"k":{"df":0,"docs":{},"π":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"5":{"tf":1.0}}}},"/":{"2":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":2.0}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"v":{"/":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"d":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"1":{"tf":1.0}}}},"t":{"a":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"1":{"tf":1.4142135623730951}},"e":{"c":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"1":{"tf":1.0}}}},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"14":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}}}}}}}}}}},"i":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"4":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"o":{"c":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"’":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.4142135623730951}},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"5":{"tf":1.0}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772}}}}},"v":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"e":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"df":0,"docs":{},"k":{"df":0,"docs":{},"π":{"df":0,"docs":{},"|":{"df":0,"docs":{},"x":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"π":{"df":0,"docs":{},"k":{"df":0,"docs":{},"·":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":5,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":1,"docs":{"15":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":2.6457513110645907},"3":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"5":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"m":{"b":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"n":{"d":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"11":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.0}}},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"c":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":8,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.7320508075688772}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"p":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}}},"f":{"(":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"(":{"0":{".":{"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"6":{"4":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"r":{"df":1,"docs":{"0":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":7,"docs":{"0":{"tf":2.6457513110645907},"1":{"tf":1.4142135623730951},"10":{"tf":2.0},"11":{"tf":1.7320508075688772},"2":{"tf":2.449489742783178},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":2.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951}}},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"t":{"(":{"&":{"df":0,"docs":{},"f":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"2":{"tf":1.0},"6":{"tf":1.0}}}},"x":{"df":3,"docs":{"15":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"n":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"14":{"tf":1.0}},"e":{"d":{"_":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}},"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"1":{"tf":2.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"‖":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"q":{"df":1,"docs":{"9":{"tf":1.0}}},"{":{"df":0,"docs":{},"p":{"/":{"(":{"df":0,"docs":{},"p":{"+":{"1":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"p":{"/":{"(":{"df":0,"docs":{},"p":{"+":{"1":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"g":{"(":{"df":0,"docs":{},"v":{"df":1,"docs":{"6":{"tf":1.0}}},"x":{"df":3,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}}},"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"α":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"ω":{"+":{"d":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"ω":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}},"−":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"p":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"–":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"r":{"df":3,"docs":{"1":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}}}},"df":2,"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"’":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}}}},"i":{"d":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"w":{"df":3,"docs":{"11":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"h":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"3":{"tf":1.0},"8":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":2.0},"1":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":2.449489742783178},"15":{"tf":1.0}},"i":{"c":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"{":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}}},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}}}},"{":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"c":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"{":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":2,"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}},"ö":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}}},"i":{"(":{"df":0,"docs":{},"x":{"df":2,"docs":{"4":{"tf":1.0},"5":{"tf":1.0}}}},"^":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"n":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":1,"docs":{"5":{"tf":1.0}}}},"i":{"c":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"d":{"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":3,"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"3":{"tf":1.0}}}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"‖":{"_":{"df":0,"docs":{},"p":{"df":3,"docs":{"13":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}},"{":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"k":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"_":{"df":0,"docs":{},"p":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"9":{"tf":1.0}}}},"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"l":{"a":{"c":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"(":{"df":0,"docs":{},"f":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"2":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"1":{"tf":1.0}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"13":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"w":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}},"m":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"9":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.0},"14":{"tf":1.0}}}}},"o":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}},"c":{"a":{"df":0,"docs":{},"l":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"t":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"f":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"m":{"_":{"df":0,"docs":{},"i":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"p":{"/":{"(":{"df":0,"docs":{},"p":{"+":{"1":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"l":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"p":{"/":{"(":{"df":0,"docs":{},"p":{"+":{"1":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"7":{"tf":1.4142135623730951}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"1":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}},"x":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"df":4,"docs":{"11":{"tf":1.0},"14":{"tf":1.7320508075688772},"7":{"tf":2.8284271247461903},"8":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":2,"docs":{"3":{"tf":1.0},"8":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"14":{"tf":1.0},"7":{"tf":1.0}}}},"u":{"df":1,"docs":{"1":{"tf":1.0}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951}},"l":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":2,"docs":{"14":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}},"²":{"/":{"df":0,"docs":{},"n":{")":{"^":{"df":0,"docs":{},"{":{"1":{"/":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"^":{"df":0,"docs":{},"{":{"1":{"/":{"4":{"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"l":{"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":8,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":2.0},"12":{"tf":2.0},"13":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":2.6457513110645907},"8":{"tf":2.6457513110645907}},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"6":{"tf":1.0}},"s":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"a":{"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"6":{"tf":1.0}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"_":{"1":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"(":{"2":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"15":{"tf":1.0},"7":{"tf":1.0}}}},"df":5,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}}},"·":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"/":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}}}}}}}}},"o":{"(":{"df":0,"docs":{},"h":{"df":1,"docs":{"2":{"tf":1.0}}},"n":{"df":1,"docs":{"7":{"tf":1.0}}}},"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"4":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"d":{"d":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{},"k":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}},"n":{"df":6,"docs":{"1":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"3":{"tf":1.0},"8":{"tf":1.0}}}},"t":{"df":1,"docs":{"7":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}},"s":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"d":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"3":{"tf":1.0},"8":{"tf":1.0}}}}},"p":{"/":{"(":{"df":0,"docs":{},"p":{"+":{"1":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}},"r":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":3,"docs":{"15":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{".":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"(":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":3,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"7":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":2.6457513110645907},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":2.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":6,"docs":{"11":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"n":{"df":3,"docs":{"14":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{},"u":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"7":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"2":{"tf":1.0}}}}}},"q":{"df":3,"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"9":{"tf":1.0}},"u":{"a":{"d":{"df":1,"docs":{"9":{"tf":1.4142135623730951}},"r":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"15":{"tf":1.0},"5":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"5":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.0}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"6":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}}},"i":{"df":0,"docs":{},"o":{"df":6,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":1.7320508075688772},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}}},"df":1,"docs":{"13":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":2,"docs":{"15":{"tf":1.0},"7":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"t":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"0":{".":{"0":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}},"g":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}},"y":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"\\"":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"8":{"tf":1.0}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":2,"docs":{"1":{"tf":1.0},"11":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"v":{"df":1,"docs":{"15":{"tf":1.0}}}}},"t":{"df":1,"docs":{"4":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}},"i":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":5,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"n":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":4,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"n":{"d":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"2":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":5,"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"11":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"1":{"2":{"8":{"df":2,"docs":{"2":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"5":{"6":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"4":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":2,"docs":{"2":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"h":{"a":{"df":1,"docs":{"15":{"tf":1.0}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}},"p":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"11":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"n":{"(":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}},"π":{"df":0,"docs":{},"v":{"df":1,"docs":{"5":{"tf":1.0}}},"x":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"e":{"/":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}},"g":{"df":0,"docs":{},"l":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"h":{"(":{"df":0,"docs":{},"k":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772}}}},"/":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":1,"docs":{"1":{"tf":1.0}}}},"z":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"(":{"0":{".":{"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":1,"docs":{"2":{"tf":1.0}},"u":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}}},"v":{"df":4,"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"6":{"tf":1.0}},"e":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}},"l":{"(":{"&":{"df":0,"docs":{},"f":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"(":{"6":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"c":{"df":3,"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"15":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":4,"docs":{"0":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":2.6457513110645907},"13":{"tf":1.7320508075688772}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":2.0},"13":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":2.23606797749979},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772}}}},"n":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{">":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}}},"u":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":4,"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}},"m":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}},"p":{"df":1,"docs":{"11":{"tf":1.0}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"0":{"tf":1.0}},"e":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}},"|":{"^":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"‖":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}},"{":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"1":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":5,"docs":{"0":{"tf":2.0},"15":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":3,"docs":{"1":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"p":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{")":{".":{"a":{"b":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"i":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"0":{".":{"3":{"df":1,"docs":{"2":{"tf":1.0}}},"5":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}}}}}}},"df":1,"docs":{"5":{"tf":1.4142135623730951}}}},"df":3,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}}}},"t":{"a":{"df":0,"docs":{},"l":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"3":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}}}},"df":2,"docs":{"2":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"u":{"(":{"df":0,"docs":{},"f":{"df":1,"docs":{"2":{"tf":1.0}}},"q":{")":{"df":0,"docs":{},"‖":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}}},"df":1,"docs":{"2":{"tf":1.0}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"3":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"1":{"0":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}},"df":3,"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"8":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"0":{"tf":1.0}}}},"t":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"5":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}},"s":{"df":7,"docs":{"0":{"tf":2.449489742783178},"1":{"tf":1.0},"10":{"tf":2.449489742783178},"2":{"tf":1.7320508075688772},"5":{"tf":2.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":5,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":1,"docs":{"11":{"tf":1.0}}}}},"df":3,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":2.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"u":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"−":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{")":{".":{"a":{"b":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.4142135623730951}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":2,"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}}}}}}},"x":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}}},"y":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"_":{"df":1,"docs":{"5":{"tf":2.0}}},"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"a":{"d":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"c":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}}}}}}},"df":0,"docs":{}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":3,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}}}}}}},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"c":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"p":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}}}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"title":{"root":{"a":{"d":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"c":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":0,"docs":{}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"c":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));