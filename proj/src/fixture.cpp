#include "relrips/fixture.hpp"

namespace relrips {

Fixture load_fixture(const std::string& path) {
    ParsedPresentation parsed = parse_presentation_file(path);
    ConfluenceReport conf =
        bounded_confluence_check(parsed.group, parsed.group.confluence_check_length);
    if (!conf.passed)
        throw domain_error("fixture '" + parsed.group.name +
                           "': rewriting system is not confluent up to length " +
                           std::to_string(conf.checked_length) + "; witness '" +
                           parsed.group.render(conf.witness) + "' has normal forms '" +
                           parsed.group.render(conf.normal_form_a) + "' and '" +
                           parsed.group.render(conf.normal_form_b) + "'");
    PeripheralClosureReport closure = check_normal_form_closed(
        parsed.group, parsed.peripheral, parsed.group.confluence_check_length);
    if (!closure.closed)
        throw domain_error("fixture '" + parsed.group.name +
                           "': peripheral subgroup is not normal-form closed; witness '" +
                           parsed.group.render(closure.witness) + "'");
    return Fixture{std::move(parsed.group), std::move(parsed.peripheral), std::move(conf),
                   std::move(closure)};
}

}  // namespace relrips
