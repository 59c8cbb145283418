// tsemi: Green's relations, skeleton order and the maps between them for a
// transformation semigroup given by generators.
//
// Exit codes: 0 all verifications passed, 1 a verification failed,
// 2 input error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsemi/analysis.hpp"
#include "tsemi/dot.hpp"
#include "tsemi/error.hpp"
#include "tsemi/io.hpp"

namespace {

  enum ExitCode { ok = 0, verification_failed = 1, input_error = 2, resource_cap = 3 };

  struct Options {
    std::string              input;
    std::vector<std::string> tasks;
    std::string              which;
    std::string              out;
    bool                     extended     = false;
    std::size_t              max_elements = tsemi::default_max_elements;
  };

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      throw tsemi::ParseError(0, "cannot write " + path);
    }
    f << text;
  }

  tsemi::InputDocument load(Options const& o) {
    auto doc = tsemi::parse_file(o.input);
    if (o.extended) {
      doc.extended = true;
    }
    return doc;
  }

  // Text report on stdout, JSON document to --out.
  int report(Options const& o, std::set<tsemi::Task> tasks) {
    auto bundle = tsemi::run(load(o), std::move(tasks), o.max_elements);
    std::cout << tsemi::text_report(bundle);
    if (!o.out.empty()) {
      write_file(o.out, tsemi::json_report(bundle).dump(2) + "\n");
    }
    return bundle.verified() ? ok : verification_failed;
  }

  int analyze(Options const& o) {
    std::set<tsemi::Task> tasks;
    for (auto const& t : o.tasks) {
      auto task = tsemi::parse_task(t);
      if (!task) {
        throw tsemi::ParseError(0, "unknown task '" + t + "'");
      }
      tasks.insert(*task);
    }
    if (tasks.empty()) {
      tasks = {tsemi::Task::green, tsemi::Task::skeleton, tsemi::Task::diagram};
    }
    return report(o, std::move(tasks));
  }

  int dot(Options const& o) {
    auto kind = tsemi::parse_dot_kind(o.which);
    if (!kind) {
      throw tsemi::ParseError(0, "unknown --which '" + o.which + "'");
    }
    auto bundle = tsemi::run(load(o), tsemi::required_tasks(*kind), o.max_elements);
    auto text   = tsemi::emit_dot(bundle, *kind);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      write_file(o.out, text);
    }
    return bundle.verified() ? ok : verification_failed;
  }

  int verify(Options const& o) {
    auto doc = load(o);
    std::set<tsemi::Task> tasks{tsemi::Task::green, tsemi::Task::skeleton,
                                tsemi::Task::diagram, tsemi::Task::regrep};
    if (doc.states <= tsemi::max_partition_states) {
      tasks.insert(tsemi::Task::functorial);
    } else {
      std::cout << "functorial: skipped, more than " << tsemi::max_partition_states
                << " states\n";
    }
    return report(o, std::move(tasks));
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's relations and subduction skeletons of transformation semigroups"};
  app.require_subcommand(1);

  Options o;
  auto    common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "input file")->required();
    sub->add_flag("--extended", o.extended, "use the extended image set I+(X)");
    sub->add_option("--max-elements", o.max_elements, "enumeration cap");
    sub->add_option("-o,--out", o.out, "output path");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "counts, class orders and diagram verdicts");
  common(analyze_cmd);
  analyze_cmd->add_option("--task", o.tasks, "green, skeleton, diagram, regrep, functorial");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz output");
  common(dot_cmd);
  dot_cmd->add_option("--which", o.which, "jposet, lposet, skeleton, eggbox, collapse")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "run every check");
  common(verify_cmd);
  auto* regrep_cmd = app.add_subcommand("regrep", "right regular representation checks");
  common(regrep_cmd);
  auto* functorial_cmd =
      app.add_subcommand("functorial", "quotient morphisms by admissible partitions");
  common(functorial_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return input_error;
  }

  try {
    if (*analyze_cmd) {
      return analyze(o);
    }
    if (*dot_cmd) {
      return dot(o);
    }
    if (*verify_cmd) {
      return verify(o);
    }
    if (*regrep_cmd) {
      return report(o, {tsemi::Task::green, tsemi::Task::regrep});
    }
    if (*functorial_cmd) {
      return report(o, {tsemi::Task::functorial});
    }
  } catch (tsemi::ResourceLimitError const& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return resource_cap;
  } catch (tsemi::ParseError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return input_error;
  } catch (tsemi::DomainError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return input_error;
  } catch (tsemi::Error const& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return verification_failed;
  }
  return ok;
}
