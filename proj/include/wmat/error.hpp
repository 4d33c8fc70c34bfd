#ifndef WMAT_ERROR_HPP
#define WMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wmat
{

// Malformed textual input (words, coefficients).
class parse_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A word was expected to be packed but is not.
class not_packed_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A substitution was applied to an index outside its declared domain.
class undefined_index_error : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Position set not contained in [1..|w|].
class position_range_error : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Operation undefined on its argument (e.g. factoring the unit word).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Requested size exceeds a configured cap.
class resource_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace wmat

#endif
