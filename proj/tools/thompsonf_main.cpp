// thompsonf: command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thompsonf/thompsonf.h"

namespace {

struct Failure {
  tf_status status;
  std::string message;
};

int exit_code(tf_status s) { return tf_status_is_validation(s) ? 2 : 3; }

void check(tf_status s) {
  if (s != TF_OK) throw Failure{s, tf_last_error()};
}

struct ElementDeleter {
  void operator()(tf_element* f) const { tf_element_free(f); }
};
struct EnvDeleter {
  void operator()(tf_env* e) const { tf_env_free(e); }
};
struct SubgroupDeleter {
  void operator()(tf_subgroup* h) const { tf_subgroup_free(h); }
};
using Element = std::unique_ptr<tf_element, ElementDeleter>;
using Env = std::unique_ptr<tf_env, EnvDeleter>;
using Subgroup = std::unique_ptr<tf_subgroup, SubgroupDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{TF_PARSE_ERROR, "cannot read file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void print(char* text) {
  std::fputs(text, stdout);
  tf_string_free(text);
}

struct Options {
  std::string format = "text";
  std::string env_file;
  std::vector<std::string> breaks;
  std::vector<std::string> specs;
  std::string at;
  std::string eps;
  std::uint64_t cap = 1'000'000;
  std::int64_t index = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::uint64_t seed = 0;
};

tf_format format_of(const Options& o) { return o.format == "json" ? TF_FORMAT_JSON : TF_FORMAT_TEXT; }

Env load_env(const Options& o) {
  tf_env* raw = nullptr;
  check(tf_env_create(&raw));
  Env env(raw);
  if (!o.env_file.empty()) check(tf_env_load_json(env.get(), read_file(o.env_file).c_str()));
  return env;
}

// "(x,y);..." is a break list, *.json an element file, anything else a name
// looked up in the environment.
Element element_from_spec(const std::string& spec, const tf_env* env) {
  tf_element* raw = nullptr;
  if (spec.empty() || spec.front() == '(' || spec == "id") {
    check(tf_element_from_breaks(spec == "id" ? "" : spec.c_str(), &raw));
  } else if (ends_with(spec, ".json")) {
    check(tf_element_from_json(read_file(spec).c_str(), &raw));
  } else {
    check(tf_word_eval(env, spec.c_str(), &raw));
  }
  return Element(raw);
}

std::vector<Element> gather_elements(const Options& o, std::size_t min_count, std::size_t max_count,
                                     const std::string& command) {
  Env env = load_env(o);
  std::vector<Element> out;
  for (const auto& b : o.breaks) {
    tf_element* raw = nullptr;
    check(tf_element_from_breaks(b.c_str(), &raw));
    out.emplace_back(raw);
  }
  for (const auto& s : o.specs) out.push_back(element_from_spec(s, env.get()));
  if (out.size() < min_count || out.size() > max_count) {
    std::string want = min_count == max_count ? std::to_string(min_count) : "at least " + std::to_string(min_count);
    throw Failure{TF_BAD_INPUT, "element " + command + " needs " + want + " element(s), got " +
                                    std::to_string(out.size())};
  }
  return out;
}

Subgroup subgroup_from_spec(const std::string& spec) {
  tf_subgroup* raw = nullptr;
  if (!spec.empty() && spec.front() == '(') {
    check(tf_subgroup_from_phi_pairs(spec.c_str(), &raw));
  } else {
    check(tf_subgroup_from_json(read_file(spec).c_str(), &raw));
  }
  return Subgroup(raw);
}

void print_element(const tf_element* f, const Options& o, tf_element_view view = TF_VIEW_FULL) {
  char* text = nullptr;
  check(tf_element_report(f, view, format_of(o), &text));
  print(text);
}

using BinaryOp = tf_status (*)(const tf_element*, const tf_element*, tf_element**);
using UnaryOp = tf_status (*)(const tf_element*, tf_element**);

void run_binary(const Options& o, const std::string& name, BinaryOp op) {
  auto els = gather_elements(o, 2, 2, name);
  tf_element* raw = nullptr;
  check(op(els[0].get(), els[1].get(), &raw));
  Element r(raw);
  print_element(r.get(), o);
}

void run_unary(const Options& o, const std::string& name, UnaryOp op) {
  auto els = gather_elements(o, 1, 1, name);
  tf_element* raw = nullptr;
  check(op(els[0].get(), &raw));
  Element r(raw);
  print_element(r.get(), o);
}

void add_element_inputs(CLI::App* cmd, Options& o, const std::string& positional_help) {
  cmd->add_option("--breaks", o.breaks, "Break list such as \"(1/4,1/2);(1/2,3/4)\" (repeatable, taken first)");
  cmd->add_option("elements", o.specs, positional_help);
  cmd->add_option("--env", o.env_file, "JSON file of named elements")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson's group F: elements, slope images and finite-index subgroups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // Each leaf sets `action`; it runs after parsing so errors map to exit codes.
  std::function<int()> action;

  auto* element = app.add_subcommand("element", "Operations on single elements of F")->require_subcommand(1);
  element->fallthrough();
  const std::string spec_help = "Break list, element JSON file, or a name such as f0 or x3";

  auto* eval = element->add_subcommand("eval", "Value of an element at a rational point");
  add_element_inputs(eval, o, spec_help);
  eval->add_option("--at", o.at, "Point in [0,1], e.g. 3/8")->required();
  eval->callback([&] {
    action = [&] {
      auto els = gather_elements(o, 1, 1, "eval");
      char* text = nullptr;
      check(tf_element_evaluate(els[0].get(), o.at.c_str(), format_of(o), &text));
      print(text);
      return 0;
    };
  });

  auto* comp = element->add_subcommand("compose", "Product in word order: apply the first, then the next");
  add_element_inputs(comp, o, spec_help);
  comp->callback([&] {
    action = [&] {
      auto els = gather_elements(o, 2, SIZE_MAX, "compose");
      Element acc = std::move(els[0]);
      for (std::size_t i = 1; i < els.size(); ++i) {
        tf_element* raw = nullptr;
        check(tf_element_compose(acc.get(), els[i].get(), &raw));
        acc.reset(raw);
      }
      print_element(acc.get(), o);
      return 0;
    };
  });

  auto* inv = element->add_subcommand("inverse", "Inverse element");
  add_element_inputs(inv, o, spec_help);
  inv->callback([&] { action = [&] { run_unary(o, "inverse", tf_element_inverse); return 0; }; });

  auto* conj = element->add_subcommand("conjugate", "f^g = g^-1 f g for elements f g");
  add_element_inputs(conj, o, spec_help);
  conj->callback([&] { action = [&] { run_binary(o, "conjugate", tf_element_conjugate); return 0; }; });

  auto* comm = element->add_subcommand("commutator", "[f,g] = f g f^-1 g^-1 for elements f g");
  add_element_inputs(comm, o, spec_help);
  comm->callback([&] { action = [&] { run_binary(o, "commutator", tf_element_commutator); return 0; }; });

  auto* phi = element->add_subcommand("phi", "Slope exponents at 0 and 1");
  add_element_inputs(phi, o, spec_help);
  phi->callback([&] {
    action = [&] {
      auto els = gather_elements(o, 1, 1, "phi");
      print_element(els[0].get(), o, TF_VIEW_PHI);
      return 0;
    };
  });

  auto* orb = element->add_subcommand("orbitals", "Maximal open intervals moved by the element");
  add_element_inputs(orb, o, spec_help);
  orb->callback([&] {
    action = [&] {
      auto els = gather_elements(o, 1, 1, "orbitals");
      print_element(els[0].get(), o, TF_VIEW_ORBITALS);
      return 0;
    };
  });

  auto* rv = element->add_subcommand("rev", "Conjugate by t -> 1 - t");
  add_element_inputs(rv, o, spec_help);
  rv->callback([&] { action = [&] { run_unary(o, "rev", tf_element_rev); return 0; }; });

  auto* show = element->add_subcommand("show", "Full report of an element");
  add_element_inputs(show, o, spec_help);
  show->callback([&] {
    action = [&] {
      auto els = gather_elements(o, 1, 1, "show");
      print_element(els[0].get(), o);
      return 0;
    };
  });

  std::string word_text;
  auto* word = element->add_subcommand("word", "Evaluate a group word such as \"[x0 x1^-1, x1^x0]\"");
  word->add_option("word", word_text, "Word over named elements")->required();
  word->add_option("--env", o.env_file, "JSON file of named elements")->check(CLI::ExistingFile);
  word->callback([&] {
    action = [&] {
      Env env = load_env(o);
      tf_element* raw = nullptr;
      check(tf_word_eval(env.get(), word_text.c_str(), &raw));
      Element r(raw);
      print_element(r.get(), o);
      return 0;
    };
  });

  auto* push = element->add_subcommand("push-to-end", "Power of f pushing a point within eps of its orbital's lower end");
  add_element_inputs(push, o, spec_help);
  push->add_option("--at", o.at, "Starting point")->required();
  push->add_option("--eps", o.eps, "Target distance from the lower end")->required();
  push->add_option("--cap", o.cap, "Iteration cap")->capture_default_str()->check(CLI::PositiveNumber);
  push->callback([&] {
    action = [&] {
      auto els = gather_elements(o, 1, 1, "push-to-end");
      char* text = nullptr;
      check(tf_element_push_to_end(els[0].get(), o.at.c_str(), o.eps.c_str(), o.cap, format_of(o), &text));
      print(text);
      return 0;
    };
  });

  for (auto* sub : element->get_subcommands({})) sub->fallthrough();

  auto* subgroup = app.add_subcommand("subgroup", "Finite-index subgroups <F', generators>")->require_subcommand(1);
  subgroup->fallthrough();
  const std::string sg_help = "Phi-pair list \"(3,7);(5,11)\" or a subgroup JSON file";

  std::string sg1, sg2;
  auto* analyze = subgroup->add_subcommand("analyze", "Index, Inner, Outer, residue, quotient, iso-to-F");
  analyze->add_option("spec", sg1, sg_help)->required();
  analyze->callback([&] {
    action = [&] {
      Subgroup h = subgroup_from_spec(sg1);
      char* text = nullptr;
      check(tf_subgroup_analyze(h.get(), format_of(o), &text));
      print(text);
      return 0;
    };
  });

  auto* iso = subgroup->add_subcommand("iso-check", "Decide whether two subgroups are isomorphic");
  iso->add_option("first", sg1, sg_help)->required();
  iso->add_option("second", sg2, sg_help)->required();
  iso->callback([&] {
    action = [&] {
      Subgroup h1 = subgroup_from_spec(sg1);
      Subgroup h2 = subgroup_from_spec(sg2);
      char* text = nullptr;
      check(tf_subgroup_iso_check(h1.get(), h2.get(), format_of(o), nullptr, &text));
      print(text);
      return 0;
    };
  });

  auto* enumerate = subgroup->add_subcommand("enumerate", "All subgroups of a given index");
  enumerate->add_option("--index", o.index, "Index n >= 1")->required();
  enumerate->callback([&] {
    action = [&] {
      char* text = nullptr;
      check(tf_enumerate_index(o.index, format_of(o), &text));
      print(text);
      return 0;
    };
  });

  auto* classify = subgroup->add_subcommand("classify", "Isomorphism classes of the subgroups of a given index");
  classify->add_option("--index", o.index, "Index n >= 1")->required();
  classify->callback([&] {
    action = [&] {
      char* text = nullptr;
      check(tf_classify_index(o.index, format_of(o), &text));
      print(text);
      return 0;
    };
  });

  for (auto* sub : subgroup->get_subcommands({})) sub->fallthrough();

  auto* kab = app.add_subcommand("kab", "Two generators of K(a,b) with a verified certificate");
  kab->fallthrough();
  kab->add_option("a", o.a, "a >= 1")->required();
  kab->add_option("b", o.b, "b >= 1")->required();
  auto* seed_opt = kab->add_option("--seed", o.seed, "Randomize the connector completion");
  kab->callback([&] {
    action = [&] {
      char* text = nullptr;
      int ok = 0;
      check(tf_kab_report(o.a, o.b, seed_opt->count() > 0, o.seed, format_of(o), &ok, &text));
      print(text);
      if (!ok) {
        std::fprintf(stderr, "error: certificate check failed\n");
        return 1;
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return exit_code(f.status);
  }
}
