/*
   Copyright 2026 The ratdec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RATDEC_ERRORS_HPP
#define RATDEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratdec {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
   public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class context_mismatch : public error {
   public:
    context_mismatch() : error("operands belong to different field contexts") {}
};

class division_by_zero : public error {
   public:
    division_by_zero() : error("division by zero field element") {}
};

class not_divisible : public error {
   public:
    not_divisible() : error("exact polynomial division has a nonzero remainder") {}
};

class zero_denominator : public error {
   public:
    zero_denominator() : error("denominator is the zero polynomial") {}
};

class zero_polynomial : public error {
   public:
    zero_polynomial() : error("operation undefined for the zero polynomial") {}
};

class characteristic_too_small : public error {
   public:
    explicit characteristic_too_small(const std::string& what) : error(what) {}
};

class bad_specialization_exhausted : public error {
   public:
    bad_specialization_exhausted()
        : error("no good evaluation point found within the retry budget") {}
};

class unsupported_field : public error {
   public:
    explicit unsupported_field(const std::string& what) : error(what) {}
};

class singular_expansion_point : public error {
   public:
    singular_expansion_point()
        : error("no regular, non-critical expansion point available") {}
};

class no_approximant : public error {
   public:
    no_approximant() : error("no Pade approximant with a nonzero denominator") {}
};

class no_such_outer : public error {
   public:
    no_such_outer() : error("no outer function u with f = u o h exists") {}
};

class base_point_of_pencil : public error {
   public:
    base_point_of_pencil()
        : error("both numerator and denominator vanish at the chosen point") {}
};

class denominator_vanishes_at_point : public error {
   public:
    denominator_vanishes_at_point()
        : error("a denominator vanishes at the chosen point") {}
};

class field_too_small : public error {
   public:
    explicit field_too_small(const std::string& what) : error(what) {}
};

class field_too_large_for_enumeration : public error {
   public:
    field_too_large_for_enumeration()
        : error("field is too large for brute-force enumeration") {}
};

class retry_budget_exhausted : public error {
   public:
    explicit retry_budget_exhausted(const std::string& what) : error(what) {}
};

class factor_is_rational : public error {
   public:
    factor_is_rational()
        : error("factor has all coefficients in the base field") {}
};

class dimension_guard : public error {
   public:
    explicit dimension_guard(const std::string& what) : error(what) {}
};

class parse_error : public error {
   public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

}  // namespace ratdec

#endif
