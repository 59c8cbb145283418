#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "tsemi/analysis.hpp"
#include "tsemi/dot.hpp"
#include "tsemi/io.hpp"

using namespace tsemi;
using namespace tsemi::test;

namespace {

  InputDocument fixture(std::string const& name) {
    return parse_file(std::string(TSEMI_FIXTURES_DIR) + "/" + name);
  }

  std::size_t count(std::string const& text, std::string const& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
      ++n;
    }
    return n;
  }

  std::set<Task> const all_tasks{Task::green, Task::skeleton, Task::diagram, Task::regrep,
                                 Task::functorial};

}  // namespace

TEST_CASE("task names") {
  for (auto t : all_tasks) {
    CHECK(parse_task(name(t)) == t);
  }
  CHECK_FALSE(parse_task("nope"));
  CHECK(parse_dot_kind("collapse") == DotKind::collapse);
  CHECK_FALSE(parse_dot_kind("hasse"));
}

TEST_CASE("counts for the non-lattice example") {
  auto b = run(fixture("example4.txt"), {Task::diagram});
  CHECK(b.tasks.contains(Task::green));
  CHECK(b.tasks.contains(Task::skeleton));
  CHECK(b.semigroup.size() == 31);
  CHECK(b.skeleton->images.size() == 16);
  CHECK(b.d_classes.size() == 13);
  CHECK(b.skeleton->poset.size() == 9);
  CHECK(b.verified());

  auto j = json_report(b);
  CHECK(j["format"] == "tsemi-report/1");
  CHECK(j["counts"]["elements"] == 31);
  CHECK(j["counts"]["image_sets"] == 16);
  CHECK(j["counts"]["d_classes"] == 13);
  CHECK(j["counts"]["skeleton_classes"] == 9);
  CHECK(j["counts"]["j_classes"] == b.green->classes(GreenKind::J).size());
  CHECK(j["counts"]["l_classes"] == b.green->classes(GreenKind::L).size());
  CHECK(j["counts"]["r_classes"] == b.green->classes(GreenKind::R).size());
  CHECK(j["counts"]["h_classes"] == b.green->classes(GreenKind::H).size());
  CHECK(j["skeleton"]["is_lattice"] == false);
  CHECK(j["verified"] == true);
  CHECK(text_report(b).find("skeleton classes: 9") != std::string::npos);
}

TEST_CASE("every task on the trivial monoid") {
  auto b = run(fixture("trivial.txt"), all_tasks);
  CHECK(b.semigroup.size() == 1);
  CHECK(b.regrep);
  CHECK(b.corollary->holds());
  CHECK(b.functorial.size() == 1);
  CHECK(b.verified());
  for (auto kind : {DotKind::jposet, DotKind::lposet, DotKind::skeleton, DotKind::eggbox,
                    DotKind::collapse}) {
    CHECK_FALSE(emit_dot(b, kind).empty());
  }
  auto sk = emit_dot(b, DotKind::skeleton);
  CHECK(count(sk, "shape=box") == 1);
  CHECK(count(sk, "->") == 0);
}

TEST_CASE("regrep and functorial tasks on the five-element monoid") {
  auto b = run(fixture("example2.txt"), {Task::regrep, Task::functorial});
  CHECK(b.regrep->rep.degree() == 5);
  CHECK(b.corollary->holds());
  CHECK(b.functorial.size() == admissible_partitions(b.semigroup).size());
  for (auto const& p : b.functorial) {
    CHECK(p.passed());
  }
  auto j = json_report(b);
  CHECK(j["regrep"].is_object());
  CHECK_FALSE(j["functorial"].is_null());
}

TEST_CASE("dot views") {
  auto one = run(fixture("example1.txt"), {Task::diagram});
  auto c   = emit_dot(one, DotKind::collapse);
  CHECK(count(c, "[label=") == 4);
  CHECK(count(c, " -> ") == 3);
  CHECK(count(c, "subgraph cluster_") == 1);
  CHECK(c.find("rankdir=BT") != std::string::npos);

  auto four = run(fixture("example4.txt"), {Task::diagram});
  auto sk   = emit_dot(four, DotKind::skeleton);
  CHECK(count(sk, "shape=box") == 9);
  CHECK(sk.find("\\n") != std::string::npos);
  auto eb = emit_dot(four, DotKind::eggbox);
  CHECK((count(eb, "<table") + count(eb, "<TABLE")) == 13);
  CHECK(count(eb, "bgcolor=\"grey\"") == 11);

  auto green_only = run(fixture("example1.txt"), {Task::green});
  CHECK_THROWS_AS(emit_dot(green_only, DotKind::skeleton), DependencyError);
  CHECK_THROWS_AS(emit_dot(green_only, DotKind::collapse), DependencyError);
  CHECK_NOTHROW(emit_dot(green_only, DotKind::jposet));
  CHECK(required_tasks(DotKind::collapse).contains(Task::diagram));
}

TEST_CASE("reports are deterministic") {
  for (auto const& f : {"example1.txt", "example2.txt", "example3.txt", "example4.txt"}) {
    auto a = run(fixture(f), {Task::diagram, Task::regrep});
    auto b = run(fixture(f), {Task::diagram, Task::regrep});
    CHECK(json_report(a).dump() == json_report(b).dump());
    CHECK(text_report(a) == text_report(b));
    for (auto kind : {DotKind::jposet, DotKind::skeleton, DotKind::eggbox, DotKind::collapse}) {
      CHECK(emit_dot(a, kind) == emit_dot(b, kind));
    }
  }
}

TEST_CASE("resource limits name the stage") {
  try {
    run(fixture("example4.txt"), {Task::green}, 10);
    FAIL("no error");
  } catch (ResourceLimitError const& e) {
    CHECK(std::string(e.what()).find("stage") != std::string::npos);
  }
}
