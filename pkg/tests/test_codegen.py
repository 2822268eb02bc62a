import json
import shutil
import subprocess

import pytest

from helpers import run_checks, scan
from schemaform.binder import BindingPlan, ControlBinding, bind
from schemaform.codegen import (
    assemble_page,
    build_page,
    generate_validator,
    render_control,
)
from schemaform.schema_ast import (
    ComplexElement,
    DerivedElement,
    Facet,
    PrimitiveDataType as T,
    SchemaDocument,
    SimpleElement,
)
from schemaform.stylesheet import StyleInstruction

NODE = shutil.which("node")


def binding(element, tag, list_type=None, validator=False, children=()):
    return ControlBinding(element, StyleInstruction(element.name, tag, list_type, 1), validator, children)


def test_header():
    b = binding(SimpleElement("title", T.STRING, "Fill-in the below fields"), "h2")
    assert render_control(b).text == "<h2>Fill-in the below fields</h2>"


def test_select_options_in_facet_order():
    values = ("United States", "France", "UK", "Canada")
    element = DerivedElement("country2", T.STRING, tuple(Facet("enumeration", v) for v in values))
    fragment = render_control(binding(element, "select"))
    assert fragment.kind == "select"
    assert fragment.text == (
        '<select name="country2">\n<option>United States</option>\n<option>France</option>\n'
        "<option>UK</option>\n<option>Canada</option>\n</select>"
    )


def test_anchor():
    element = SimpleElement("support", T.STRING, "Contact our Support", "support.html")
    assert render_control(binding(element, "a")).text == '<a href="support.html">Contact our Support</a>'


def test_anchor_text_falls_back_to_fixed():
    element = SimpleElement("help", T.STRING, None, "help.html")
    assert render_control(binding(element, "a")).text == '<a href="help.html">help.html</a>'


def test_input_without_default_has_no_value():
    assert render_control(binding(SimpleElement("pass2", T.STRING), "password")).text == (
        '<input name="pass2" type="password"/>'
    )


@pytest.mark.parametrize("tag", ["text", "password", "checkbox", "radio", "submit"])
def test_input_with_default(tag):
    fragment = render_control(binding(SimpleElement("n", T.STRING, "v"), tag))
    assert fragment.text == f'<input name="n" type="{tag}" value="v"/>'


def test_textarea():
    element = SimpleElement("comments2", T.STRING, "Your comments go here")
    assert render_control(binding(element, "textarea")).text == (
        '<textarea name="comments2" rows="5" cols="30">Your comments go here</textarea>'
    )


def test_label():
    assert render_control(binding(SimpleElement("l", T.STRING, "Name: "), "label")).text == (
        "<label>Name: </label>"
    )


def test_lists():
    children = (SimpleElement("a", T.STRING, "one"), SimpleElement("b", T.STRING, "two"))
    group = ComplexElement("items", children=children)
    assert render_control(binding(group, "ol", "i", children=children)).text == (
        '<ol type="i">\n<li>one</li>\n<li>two</li>\n</ol>'
    )
    assert render_control(binding(group, "ul", children=children)).text == (
        "<ul>\n<li>one</li>\n<li>two</li>\n</ul>"
    )


def test_validator_attribute():
    element = DerivedElement("phone2", T.STRING, (Facet("minLength", "6"), Facet("maxLength", "12")))
    fragment = render_control(binding(element, "text", validator=True))
    assert fragment.text == '<input name="phone2" type="text" onBlur="validate_phone2(this)"/>'


def test_markup_is_escaped():
    element = SimpleElement("x", T.STRING, '<b>"A&B"</b>', "a?b=1&c='2'")
    assert render_control(binding(element, "a")).text == (
        '<a href="a?b=1&amp;c=&#x27;2&#x27;">&lt;b&gt;&quot;A&amp;B&quot;&lt;/b&gt;</a>'
    )
    page = assemble_page(BindingPlan((binding(element, "text"),)))
    assert not scan(page).errors


def test_empty_page():
    assert assemble_page(BindingPlan()) == (
        '<html><head><script type="text/javascript"></script></head><body><form></form></body></html>'
    )


def test_rows_break_after_controls_not_after_headers_or_labels():
    plan = bind(
        SchemaDocument(
            (
                SimpleElement("t", T.STRING, "T"),
                SimpleElement("l", T.STRING, "L"),
                SimpleElement("i", T.STRING),
                SimpleElement("s", T.STRING, "Go"),
            )
        ),
        [StyleInstruction("t", "h1"), StyleInstruction("l", "label"),
         StyleInstruction("i", "text"), StyleInstruction("s", "submit")],
    )
    assert assemble_page(plan) == (
        '<html><head><script type="text/javascript"></script></head><body><form>\n'
        "<h1>T</h1>\n<label>L</label>\n<input name=\"i\" type=\"text\"/>\n<br>\n"
        '<input name="s" type="submit" value="Go"/>\n</form></body></html>'
    )


def test_repeated_controls_get_suffixed_names():
    b = ControlBinding(SimpleElement("a", T.STRING), StyleInstruction("a", "text"), False, (), 2)
    page = build_page(BindingPlan((b,)))
    assert [f.text for f in page.fragments] == [
        '<input name="a-1" type="text"/>',
        '<input name="a-2" type="text"/>',
    ]


# -- validators ----------------------------------------------------------------

def phone_binding():
    element = DerivedElement("phone2", T.STRING, (Facet("minLength", "6"), Facet("maxLength", "12")))
    return binding(element, "text", validator=True)


def test_phone_validator_routine():
    routine = generate_validator(phone_binding())
    assert routine.function_name == "validate_phone2"
    assert routine.checks == (("minLength", 6), ("maxLength", 12))
    assert routine.text == (
        "function validate_phone2(object_var)\n{\n"
        "if (object_var.value.length < 6 || object_var.value.length > 12)\n"
        'object_var.value = "Bad Input";\n}'
    )


def test_length_facet_brute_force():
    element = DerivedElement("code", T.STRING, (Facet("length", "4"),))
    routine = generate_validator(binding(element, "text", validator=True))
    for n in range(9):
        value = "x" * n
        expected = value if n == 4 else "Bad Input"
        assert run_checks(routine.checks, value) == expected


POSITIVE_SAMPLES = ["5", "0", "-3", "abc", "5.5"]


def positive_integer_oracle(text: str) -> bool:
    # Hand-written: only plain digit strings with a value above zero.
    return text.isdigit() and int(text) > 0


def test_positive_integer_validator():
    routine = generate_validator(binding(SimpleElement("age", T.POSITIVE_INTEGER), "text", validator=True))
    assert routine.checks == (("positiveInteger", None),)
    for sample in POSITIVE_SAMPLES:
        accepted = run_checks(routine.checks, sample) == sample
        assert accepted == positive_integer_oracle(sample), sample


def test_check_order_type_then_facets_with_merged_enumeration():
    element = DerivedElement(
        "n",
        T.DECIMAL,
        (Facet("enumeration", "1.5"), Facet("totalDigits", "3"), Facet("enumeration", "2.25"),
         Facet("fractionDigits", "2")),
    )
    routine = generate_validator(binding(element, "text", validator=True))
    assert routine.checks == (
        ("decimal", None),
        ("enumeration", ("1.5", "2.25")),
        ("totalDigits", 3),
        ("fractionDigits", 2),
    )


def _node_eval(routine, values):
    script = routine.text + "\n" + (
        f"const values = {json.dumps(values)};\n"
        "const out = values.map(v => { const o = {value: v}; "
        f"{routine.function_name}(o); return o.value; }});\n"
        "console.log(JSON.stringify(out));\n"
    )
    result = subprocess.run([NODE, "-e", script], capture_output=True, text=True, check=True)
    return json.loads(result.stdout)


VALIDATOR_CASES = [
    (SimpleElement("v", T.INTEGER), ["12", "+3", "-0", "", "1.0", "x", "1e3"]),
    (SimpleElement("v", T.POSITIVE_INTEGER), POSITIVE_SAMPLES + ["+7", "007"]),
    (SimpleElement("v", T.DECIMAL), ["1", "-2.50", "1.", ".5", "abc", "+0.0"]),
    (SimpleElement("v", T.BOOLEAN), ["true", "false", "True", "1", ""]),
    (SimpleElement("v", T.DATETIME), ["1/1/2010", "2010-01-01", "not a date", ""]),
    (DerivedElement("v", T.STRING, (Facet("pattern", "[A-Z]{2}[0-9]+"),)), ["AB1", "ab1", "AB", "XAB12"]),
    (DerivedElement("v", T.STRING, (Facet("enumeration", "a b"), Facet("enumeration", 'q"'))), ["a b", 'q"', "a"]),
    (DerivedElement("v", T.INTEGER, (Facet("totalDigits", "3"),)), ["123", "1234", "-99"]),
    (DerivedElement("v", T.DECIMAL, (Facet("fractionDigits", "1"),)), ["1.5", "1.55", "2"]),
    (DerivedElement("v", T.STRING, (Facet("length", "4"),)), ["abcd", "abc", "abcde"]),
]


@pytest.mark.skipif(NODE is None, reason="node not installed")
@pytest.mark.parametrize("element, values", VALIDATOR_CASES)
def test_generated_javascript_agrees_with_check_interpreter(element, values):
    routine = generate_validator(binding(element, "text", validator=True))
    assert _node_eval(routine, values) == [run_checks(routine.checks, v) for v in values]


@pytest.mark.skipif(NODE is None, reason="node not installed")
def test_phone_javascript_brute_force():
    routine = generate_validator(phone_binding())
    values = ["7" * n for n in range(16)]
    expected = [v if 6 <= len(v) <= 12 else "Bad Input" for v in values]
    assert _node_eval(routine, values) == expected
