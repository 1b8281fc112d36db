#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amcm/domains.hpp"
#include "support/generators.hpp"

using namespace amcm;

TEST_CASE("identifiers") {
    CHECK(is_valid_identifier("x"));
    CHECK(is_valid_identifier("_a1"));
    CHECK_FALSE(is_valid_identifier("1a"));
    CHECK_FALSE(is_valid_identifier(""));
    CHECK_FALSE(is_valid_identifier("if"));
    CHECK_FALSE(is_valid_identifier("read"));
    CHECK_THROWS_AS(Ident("else"), std::invalid_argument);
    CHECK_THROWS_AS(Ident("a-b"), std::invalid_argument);
}

TEST_CASE("value tags are disjoint") {
    CHECK(Value::integer(1) != Value::boolean(true));
    CHECK(Value::integer(0) != Value::boolean(false));
    CHECK(Value::string("1") != Value::integer(1));
    CHECK(Value::integer(0).tag_name() == "Int");
    CHECK(Value::boolean(false).tag_name() == "Bool");
    CHECK(Value::string("").tag_name() == "Str");
}

TEST_CASE("lookup") {
    const Ident x("x");
    const Ident y("y");
    CHECK(lookup(MemoryMap{}, x) == std::nullopt);
    const MemoryMap m{{"x", Value::integer(1)}};
    CHECK(lookup(m, x) == Binding(Value::integer(1)));
    CHECK(lookup(m, y) == std::nullopt);
}

TEST_CASE("bind_value") {
    const Ident x("x");
    const State s0;
    const State s1 = bind_value(s0, x, Value::integer(0));
    CHECK(s1 == State{MemoryMap{{"x", Value::integer(0)}}, {}, {}});
    CHECK(s0.memory.empty());

    const State s2 = bind_value(State{MemoryMap{{"x", Value::integer(1)}}, {}, {}}, x, Value::boolean(true));
    CHECK(lookup(s2.memory, x) == Binding(Value::boolean(true)));
    CHECK(s2.memory.size() == 1);

    const State framed{MemoryMap{{"y", Value::integer(1)}}, {Value::integer(5)}, {Value::string("o")}};
    const State s3 = bind_value(framed, x, Value::integer(0));
    CHECK(s3 == State{MemoryMap{{"y", Value::integer(1)}, {"x", Value::integer(0)}}, {Value::integer(5)},
                      {Value::string("o")}});
}

TEST_CASE("property: frame and update laws") {
    gen::Rng rng(1);
    const std::vector<std::string> ids{"a", "b", "c", "d"};
    for (int i = 0; i < 2000; ++i) {
        const State s = gen::random_state(rng, ids);
        const Ident id(gen::pick(rng, ids));
        const Value v = gen::random_value(rng);
        const State t = bind_value(s, id, v);
        REQUIRE(lookup(t.memory, id) == Binding(v));
        for (const auto& other : ids) {
            if (other == id.name()) continue;
            REQUIRE(lookup(t.memory, Ident(other)) == lookup(s.memory, Ident(other)));
        }
        REQUIRE(t.input == s.input);
        REQUIRE(t.output == s.output);
    }
}

TEST_CASE("memory equality is structural") {
    const MemoryMap a = MemoryMap{}.bind(Ident("x"), Value::integer(1)).bind(Ident("y"), Value::integer(2));
    const MemoryMap b = MemoryMap{}.bind(Ident("y"), Value::integer(2)).bind(Ident("x"), Value::integer(1));
    CHECK(a == b);
    CHECK(a != MemoryMap{});
}

TEST_CASE("canonical state text") {
    const State s{MemoryMap{{"y", Value::boolean(true)}, {"x", Value::integer(0)}}, {}, {}};
    CHECK(format_state(s) == "mem{x=0,y=true} in[] out[]");
    const State t{MemoryMap{{"s", Value::string("a\"b")}}, {Value::integer(1), Value::boolean(false)}, {Value::integer(-3)}};
    CHECK(format_state(t) == "mem{s=\"a\\\"b\"} in[1,false] out[-3]");
}

TEST_CASE("error descriptions name their site") {
    CHECK(describe(ErrorKind{UnboundIdentifier{Ident("y")}}) == "UnboundIdentifier(y)");
    CHECK(describe(ErrorKind{TypeMismatch{"Bool", "Int", "if-condition"}}) ==
          "TypeMismatch(expected Bool, got Int, at if-condition)");
    CHECK(describe(ErrorKind{InputExhausted{}}) == "InputExhausted");
}
