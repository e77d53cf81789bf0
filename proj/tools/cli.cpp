#include "cli.hpp"

#include <climits>
#include <ostream>

#include "CLI11.hpp"

#include "ordgroups/errors.hpp"
#include "ordgroups/fiber.hpp"
#include "ordgroups/gentorsion.hpp"
#include "ordgroups/hom_search.hpp"
#include "ordgroups/magnus.hpp"
#include "ordgroups/rs_rewrite.hpp"
#include "ordgroups/selftest.hpp"
#include "ordgroups/smith.hpp"
#include "ordgroups/text.hpp"

namespace ordgroups::cli {

namespace {

constexpr std::uint64_t default_seed = 20240611;

std::string literal(OrderedGroup const &g, Element const &e) { return "g{" + g.format(e) + "}"; }

// Mixed word (s-letters and g{...}) evaluated under pi1, or a bare literal.
Element parse_element(std::string const &text, OrderedGroup const &group)
{
	try
	{
		return pi1(parse_mixed_word(text, group), group);
	}
	catch (std::invalid_argument const &)
	{
	}
	return group.parse(text);
}

std::string format_monomial(Monomial const &m, std::function<std::string(Var)> const &name)
{
	std::string out;
	for (auto v : m)
		out += name(v);
	return out;
}

void print_series(std::ostream &out, Series const &f, std::function<std::string(Var)> const &name)
{
	out << "series=" << to_string(f, name) << '\n';
	for (auto const &[m, c] : f.terms())
		out << "coef[" << format_monomial(m, name) << "]=" << c.str() << '\n';
}

void print_report(std::ostream &out, Presentation const &pres, HomSearchReport const &r)
{
	auto target = make_target(r.target);
	out << "target=" << r.target << " total=" << r.total << " nontrivial=" << r.nontrivial
	    << " nodes=" << r.nodes;
	if (r.sample)
	{
		out << " sample=";
		for (std::size_t i = 0; i < r.sample->size(); ++i)
			out << (i ? "," : "") << pres.names()[i] << ':' << target.format_element((*r.sample)[i]);
	}
	out << '\n';
}

FiberElement parse_fiber(std::string const &u, std::string const &v, GroupPtr const &g)
{
	return FiberElement::make(parse_mixed_word(u, *g), parse_free_word(v, g->rank()), g);
}

void print_fiber(std::ostream &out, FiberElement const &p)
{
	auto const &g = p.group();
	out << "u=" << format_mixed_word(p.u(), g) << '\n';
	out << "v=" << format_free_word(p.v()) << '\n';
	out << "kernel=" << format_kernel_word(p.decomposition().k, g) << '\n';
}

} // namespace

int dispatch(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Ordered groups toolkit: Magnus orders, kernel rewriting, fiber products and "
	             "finite-quotient checks.",
	             "ordgroups"};
	app.require_subcommand(1);

	std::string group_spec, target_spec = "S4";
	std::vector<std::string> words;
	int deg = 0, max_k = 2, radius = 1, K = 4, cases = SelftestScale{}.cases;
	std::uint64_t seed = default_seed, max_nodes = 0, max_ms = 0;

	auto add_budget = [&](CLI::App *sub) {
		sub->add_option("--max-nodes", max_nodes, "Node budget (0 = unlimited)");
		sub->add_option("--max-ms", max_ms, "Wall-time budget in milliseconds (0 = unlimited)");
	};

	auto *order = app.add_subcommand("order", "Compare elements of an ordered group");
	order->require_subcommand(1);
	auto *order_cmp = order->add_subcommand("cmp", "Compare two elements: LESS, EQUAL or GREATER");
	order_cmp->add_option("--group", group_spec, "Z^n, BS(1,m) or Fr")->required();
	order_cmp->add_option("elements", words, "Two elements")->required()->expected(2);

	auto *magnus = app.add_subcommand("magnus", "Magnus expansion");
	magnus->require_subcommand(1);
	auto *magnus_expand = magnus->add_subcommand("expand", "Truncated Magnus expansion of a word");
	magnus_expand->add_option("--deg", deg, "Truncation degree")->required()->check(CLI::Range(1, 64));
	magnus_expand->add_option("--group", group_spec,
	                          "Expand a kernel word x{g,i} ... with G-indexed variables");
	magnus_expand->add_option("word", words, "Free word (x1 x2^-1) or kernel word")->required()->expected(1);

	auto *rs = app.add_subcommand("rs", "Kernel rewriting");
	rs->require_subcommand(1);
	auto *rs_rewrite = rs->add_subcommand("rewrite", "Rewrite a kernel element in the x{g,i} basis");
	rs_rewrite->add_option("--group", group_spec)->required();
	rs_rewrite->add_option("word", words, "Mixed word")->required()->expected(1);

	auto *fiber = app.add_subcommand("fiber", "Fiber product elements");
	fiber->require_subcommand(1);
	auto *fiber_make = fiber->add_subcommand("make", "Validate (u, v) and decompose it");
	auto *fiber_mul = fiber->add_subcommand("mul", "Product (u1, v1)(u2, v2)");
	auto *fiber_cmp_cmd = fiber->add_subcommand("cmp", "Compare (u1, v1) with (u2, v2)");
	auto *fiber_act = fiber->add_subcommand("act", "Act on a kernel word by a free word");
	for (auto *sub : {fiber_make, fiber_mul, fiber_cmp_cmd, fiber_act})
		sub->add_option("--group", group_spec)->required();
	fiber_make->add_option("words", words, "u v")->required()->expected(2);
	fiber_mul->add_option("words", words, "u1 v1 u2 v2")->required()->expected(4);
	fiber_cmp_cmd->add_option("words", words, "u1 v1 u2 v2")->required()->expected(4);
	fiber_act->add_option("words", words, "w k")->required()->expected(2);

	auto *quotients = app.add_subcommand("quotients", "Homomorphisms into finite groups");
	quotients->require_subcommand(1);
	auto *q_count = quotients->add_subcommand("count", "Count homomorphisms into a target");
	q_count->add_option("--target", target_spec, "S2..S6 or a table file");
	q_count->add_option("presentation", words, "Fixture or file")->required()->expected(1);
	add_budget(q_count);
	auto *q_trivial = quotients->add_subcommand("trivial-upto", "No nontrivial maps into S2..SK");
	q_trivial->add_option("--K", K)->check(CLI::Range(2, 6));
	q_trivial->add_option("presentation", words, "Fixture or file")->required()->expected(1);
	add_budget(q_trivial);

	auto *abelianize = app.add_subcommand("abelianize", "Invariant factors of H1");
	abelianize->add_option("presentation", words, "Fixture or file")->required()->expected(1);

	auto *gentorsion = app.add_subcommand("gentorsion", "Generalized torsion certificates");
	gentorsion->require_subcommand(1);
	auto *gt_verify = gentorsion->add_subcommand("verify", "Check base and conjugators");
	gt_verify->add_option("--group", group_spec)->required();
	gt_verify->add_option("elements", words, "base c1 ... ck")->required()->expected(2, INT_MAX);
	auto *gt_search = gentorsion->add_subcommand("search", "Search conjugators in a ball");
	gt_search->add_option("--group", group_spec)->required();
	gt_search->add_option("--max-k", max_k)->check(CLI::Range(1, 3));
	gt_search->add_option("--radius", radius)->check(CLI::Range(0, 3));
	gt_search->add_option("base", words)->required()->expected(1);

	auto *selftest = app.add_subcommand("selftest", "Run the randomized invariant suite");
	selftest->add_option("--seed", seed);
	selftest->add_option("--cases", cases, "Samples per check")->check(CLI::Range(1, 1000000));

	std::vector<char const *> argv{"ordgroups"};
	for (auto const &a : args)
		argv.push_back(a.c_str());

	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (CLI::ParseError const &e)
	{
		int rc = app.exit(e, out, err);
		return rc == 0 ? Ok : UsageFailure;
	}

	auto budget = [&] {
		SearchBudget b;
		if (max_nodes)
			b.max_nodes = max_nodes;
		b.max_time = std::chrono::milliseconds(max_ms);
		return b;
	};

	try
	{
		if (order_cmp->parsed())
		{
			auto g = make_group(group_spec);
			auto a = parse_element(words[0], *g);
			auto b = parse_element(words[1], *g);
			g->require(a);
			g->require(b);
			if (auto const *fa = std::get_if<FreeWord>(&a))
			{
				auto r = magnus_compare(*fa, std::get<FreeWord>(b));
				out << to_string(r.order) << " cap=" << r.cap << '\n';
			}
			else
				out << to_string(g->cmp(a, b)) << '\n';
		}
		else if (magnus_expand->parsed())
		{
			if (group_spec.empty())
			{
				auto w = parse_free_word(words[0], INT_MAX);
				print_series(out, expand(w, deg), [](Var v) { return "X" + std::to_string(v); });
			}
			else
			{
				auto g = make_group(group_spec);
				auto k = parse_kernel_word(words[0], *g);
				KernelWord const *ks[] = {&k};
				VariableRanking vars(*g, ks);
				print_series(out, expand(k, vars, deg), [&](Var v) {
					auto const &[e, i] = vars.variable(v);
					return "X{" + g->format(e) + "," + std::to_string(i) + "}";
				});
			}
		}
		else if (rs_rewrite->parsed())
		{
			auto g = make_group(group_spec);
			out << format_kernel_word(tau(parse_mixed_word(words[0], *g), *g), *g) << '\n';
		}
		else if (fiber_make->parsed())
		{
			auto g = make_group(group_spec);
			print_fiber(out, parse_fiber(words[0], words[1], g));
		}
		else if (fiber_mul->parsed())
		{
			auto g = make_group(group_spec);
			auto p = parse_fiber(words[0], words[1], g);
			auto q = parse_fiber(words[2], words[3], g);
			print_fiber(out, ordgroups::fiber_mul(p, q));
		}
		else if (fiber_cmp_cmd->parsed())
		{
			auto g = make_group(group_spec);
			auto p = parse_fiber(words[0], words[1], g);
			auto q = parse_fiber(words[2], words[3], g);
			auto r = fiber_compare(p, q);
			out << "order=" << to_string(r.order) << " level=" << to_string(r.level) << '\n';
		}
		else if (fiber_act->parsed())
		{
			auto g = make_group(group_spec);
			auto w = parse_free_word(words[0], g->rank());
			auto k = parse_kernel_word(words[1], *g);
			out << format_kernel_word(act(w, k, *g), *g) << '\n';
		}
		else if (q_count->parsed())
		{
			auto pres = load_presentation(words[0]);
			auto target = make_target(target_spec);
			auto r = enumerate_homs(pres, target, budget());
			print_report(out, pres, r);
		}
		else if (q_trivial->parsed())
		{
			auto pres = load_presentation(words[0]);
			bool trivial = true;
			for (auto const &r : symmetric_quotient_reports(pres, K, budget()))
			{
				print_report(out, pres, r);
				trivial = trivial && r.nontrivial == 0;
			}
			out << "K=" << K << " trivial=" << (trivial ? "true" : "false") << '\n';
		}
		else if (abelianize->parsed())
		{
			out << format_abelianization(abelianization(load_presentation(words[0]))) << '\n';
		}
		else if (gt_verify->parsed())
		{
			GroupPtr g;
			try
			{
				g = make_group(group_spec);
			}
			catch (std::invalid_argument const &)
			{
				// a presentation-only group: parsed, then refused
				auto pres = load_presentation(group_spec);
				std::vector<FreeWord> conj;
				for (std::size_t i = 1; i < words.size(); ++i)
					conj.push_back(pres.parse_word(words[i]));
				verify_certificate(pres, pres.parse_word(words[0]), conj);
			}
			GenTorsionCertificate cert{parse_element(words[0], *g), {}};
			for (std::size_t i = 1; i < words.size(); ++i)
				cert.conjugators.push_back(parse_element(words[i], *g));
			out << "valid=" << (verify_certificate(*g, cert) ? "true" : "false") << '\n';
		}
		else if (gt_search->parsed())
		{
			auto g = make_group(group_spec);
			auto base = parse_element(words[0], *g);
			auto cert = search_certificate(*g, base, max_k, radius);
			out << "found=" << (cert ? "true" : "false");
			if (cert)
			{
				out << " k=" << cert->conjugators.size() << " conjugators=";
				for (std::size_t i = 0; i < cert->conjugators.size(); ++i)
					out << (i ? "," : "") << literal(*g, cert->conjugators[i]);
			}
			out << '\n';
		}
		else if (selftest->parsed())
		{
			auto reports = run_selftest(seed, {cases});
			int failed = 0;
			for (auto const &r : reports)
			{
				out << (r.ok() ? "PASS " : "FAIL ") << format_report(r) << '\n';
				failed += !r.ok();
			}
			out << "seed=" << seed << " checks=" << reports.size() << " failed=" << failed << '\n';
			return failed ? DomainFailure : Ok;
		}
		return Ok;
	}
	catch (NotInKernel const &e)
	{
		out << "error=not_in_kernel residual=g{" << e.residual << "}\n";
		err << e.what() << '\n';
		return DomainFailure;
	}
	catch (NotInFiber const &e)
	{
		out << "error=not_in_fiber pi1=g{" << e.pi1 << "} pi2=g{" << e.pi2 << "}\n";
		err << e.what() << '\n';
		return DomainFailure;
	}
	catch (WordProblemUnavailable const &e)
	{
		out << "error=word_problem_unavailable\n";
		err << e.what() << '\n';
		return DomainFailure;
	}
	catch (DomainError const &e)
	{
		out << "error=domain\n";
		err << e.what() << '\n';
		return DomainFailure;
	}
	catch (BudgetExhausted const &e)
	{
		out << "error=budget_exhausted nodes=" << e.nodes << " partial_total=" << e.partial_total
		    << '\n';
		err << e.what() << '\n';
		return BudgetFailure;
	}
	catch (std::invalid_argument const &e)
	{
		err << "usage error: " << e.what() << '\n';
		return UsageFailure;
	}
	catch (std::out_of_range const &e)
	{
		err << "usage error: " << e.what() << '\n';
		return UsageFailure;
	}
	catch (std::exception const &e)
	{
		err << "error: " << e.what() << '\n';
		return DomainFailure;
	}
}

} // namespace ordgroups::cli
