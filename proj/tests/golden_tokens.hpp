#pragma once

#include <string>
#include <vector>

#include "textcx/tokenizer.hpp"

namespace textcx::golden {

struct NaturalCase {
  std::string input;
  Language lang;
  std::vector<std::string> expected;
};

struct ArtificialCase {
  std::string dialect;
  std::string input;
  std::vector<std::string> expected;
  bool expect_warning = false;
};

inline const std::vector<NaturalCase>& natural_cases() {
  static const std::vector<NaturalCase> cases = {
      {"The cat. The dog.", Language::english, {"the", "cat", ".", "the", "dog", "."}},
      {"", Language::english, {}},
      {"Vivió allí. Vivio allí.", Language::spanish, {"vivió", "allí", ".", "vivio", "allí", "."}},
      {"Pi is 3.14 today.", Language::english, {"pi", "is", "3.14", "today", "."}},
      {"Paris is big. Paris is old. We love Paris.", Language::english,
       {"Paris", "is", "big", ".", "Paris", "is", "old", ".", "we", "love", "Paris", "."}},
      {"1,000 people came, 2 left.", Language::english, {"1,000", "people", "came", ",", "2", "left", "."}},
      {"Hello, world!", Language::english, {"hello", ",", "world", "!"}},
      {"¿Qué tal? ¡Muy bien!", Language::spanish, {"¿", "qué", "tal", "?", "¡", "Muy", "bien", "!"}},
      {"Él dijo. ¿Él vino?", Language::spanish, {"él", "dijo", ".", "¿", "él", "vino", "?"}},
      {"NASA is here. NASA left.", Language::english, {"NASA", "is", "here", ".", "NASA", "left", "."}},
      {"don't", Language::english, {"don", "'", "t"}},
      {"well-known", Language::english, {"well", "-", "known"}},
      {"Case matters: Apple apple.", Language::english, {"case", "matters", ":", "Apple", "apple", "."}},
      {"end.Start", Language::english, {"end", ".", "start"}},
      {"3.14.15", Language::english, {"3.14.15"}},
      {"v1.2", Language::english, {"v1.2"}},
      {"Costs $5.50.", Language::english, {"costs", "$", "5.50", "."}},
      {"1.", Language::english, {"1", "."}},
      {".5", Language::english, {".", "5"}},
      {"a  b\tc\nd", Language::english, {"a", "b", "c", "d"}},
      {"café cafe Café", Language::spanish, {"café", "cafe", "Café"}},
      {"Über alles. Über.", Language::other, {"über", "alles", ".", "über", "."}},
      {"«Hola», dijo.", Language::spanish, {"«", "Hola", "»", ",", "dijo", "."}},
      {"The end... The", Language::english, {"the", "end", ".", ".", ".", "the"}},
      {"Hi.\r\nBye.", Language::english, {"hi", ".", "bye", "."}},
      {"x y", Language::english, {"x", "y"}},
      {"(a)[b]{c}", Language::english, {"(", "a", ")", "[", "b", "]", "{", "c", "}"}},
      {"e-mail: a@b.com", Language::english, {"e", "-", "mail", ":", "a", "@", "b", ".", "com"}},
      {"Dr. Smith met Smith.", Language::english, {"dr", ".", "Smith", "met", "Smith", "."}},
      {"ÉL. él", Language::spanish, {"ÉL", ".", "él"}},
      {"Año 2024: récord.", Language::spanish, {"año", "2024", ":", "récord", "."}},
      {"A b. C d.", Language::english, {"a", "b", ".", "c", "d", "."}},
      {"12,5 y 3,75.", Language::spanish, {"12,5", "y", "3,75", "."}},
      {"Ωmega. Ωmega", Language::other, {"ωmega", ".", "ωmega"}},
      {"a\xE2\x80\x94" "b", Language::english, {"a", "\xE2\x80\x94", "b"}},
      {"Go. go. Go", Language::english, {"go", ".", "go", ".", "go"}},
  };
  return cases;
}

inline const std::vector<ArtificialCase>& artificial_cases() {
  static const std::vector<ArtificialCase> cases = {
      {"c", "print(\"hello world\")", {"print", "(", "\"helloworld\"", ")"}},
      {"c", "x=1;", {"x", "=", "1", ";"}},
      {"c", "// only a comment", {}},
      {"c", "x = 1 // note", {"x", "=", "1"}},
      {"c", "s = \"//not a comment\";", {"s", "=", "\"//notacomment\"", ";"}},
      {"c", "a /* b c */ d", {"a", "d"}},
      {"c", "int a/*x*/b;", {"int", "a", "b", ";"}},
      {"c", "x += 3.14f;", {"x", "+", "=", "3.14f", ";"}},
      {"c", "y = 0x1F + 1e-5;", {"y", "=", "0x1F", "+", "1e-5", ";"}},
      {"c", "c = 'a';", {"c", "=", "'a'", ";"}},
      {"c", "s = \"a \\\" b\";", {"s", "=", "\"a\\\"b\"", ";"}},
      {"c", "my_var2 = f(a, b);", {"my_var2", "=", "f", "(", "a", ",", "b", ")", ";"}},
      {"c", "a.b->c", {"a", ".", "b", "-", ">", "c"}},
      {"c", "x; /* unterminated", {"x", ";"}, true},
      {"c", "\"it's // fine\"", {"\"it's//fine\""}},
      {"c", "x = 1.5e+3;", {"x", "=", "1.5e+3", ";"}},
      {"c", "i++;", {"i", "+", "+", ";"}},
      {"cpp", "std::cout << \"a b\";", {"std", ":", ":", "cout", "<", "<", "\"ab\"", ";"}},
      {"csharp", "Console.WriteLine(\"Hi there\"); // greet",
       {"Console", ".", "WriteLine", "(", "\"Hithere\"", ")", ";"}},
      {"java", "/** doc */ public int x = 10;", {"public", "int", "x", "=", "10", ";"}},
      {"java", "String s = \"open;\nint y;", {"String", "s", "=", "\"", "open", ";", "int", "y", ";"}},
      {"basic", "Print \"Hello World\" ' comment", {"Print", "\"HelloWorld\""}},
      {"basic", "REM remark\nx = 1", {"x", "=", "1"}},
      {"basic", "s = \"say \"\"hi\"\" now\"", {"s", "=", "\"say\"\"hi\"\"now\""}},
      {"basic", "Dim remote As Integer", {"Dim", "remote", "As", "Integer"}},
      {"matlab", "x = a'; % transpose", {"x", "=", "a", "'", ";"}},
      {"matlab", "s = 'hello world';", {"s", "=", "'helloworld'", ";"}},
      {"matlab", "%{\nblock\n%}\ny = 2;", {"y", "=", "2", ";"}},
      {"matlab", "b = [1 2]';", {"b", "=", "[", "1", "2", "]", "'", ";"}},
      {"html", "<p class=\"big red\">Hi</p><!-- note -->",
       {"<", "p", "class", "=", "\"bigred\"", ">", "Hi", "<", "/", "p", ">"}},
      {"html", "<!-- a --> b", {"b"}},
      {"php", "$x = 5; # note", {"$", "x", "=", "5", ";"}},
      {"php", "echo 'a b'; // c", {"echo", "'ab'", ";"}},
      {"php", "/* x */ $y = \"q\";", {"$", "y", "=", "\"q\"", ";"}},
      {"plain", "Error: disk full", {"Error", ":", "disk", "full"}},
      {"plain", "value \"a b\" # kept", {"value", "\"ab\"", "#", "kept"}},
  };
  return cases;
}

}  // namespace textcx::golden
