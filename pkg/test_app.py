#!/usr/bin/env python3
"""
Simple test script to verify TopoGalois components
"""

import sys
from pathlib import Path

# Run from any directory
sys.path.insert(0, str(Path(__file__).parent))


def test_imports():
    """Test that all modules can be imported"""
    from src.config.settings import RunConfig, ToleranceConfig
    from src.utils.input_validator import validate_input_file, validate_polygon_record
    from src.utils.logger import setup_logging
    from src.processors.classification_processor import ClassificationProcessor
    from src.processors.algebraic_processor import AlgebraicProcessor
    from src.processors.polynomial_inverse_processor import PolynomialInverseProcessor
    from src.processors.fuchsian_processor import FuchsianProcessor
    from src.processors.polygon_processor import PolygonProcessor
    from src.cli.main import build_parser
    print("✓ All modules imported successfully")


def test_settings():
    """Test settings configuration"""
    from src.config.settings import RunConfig
    settings = RunConfig()
    assert settings.tolerances.root > 0
    assert 1 <= settings.kmax
    print(f"✓ Settings initialized - Format: {settings.output_format}, Seed: {settings.seed}")


def test_input_validator():
    """Test input file and record validation"""
    from src.utils.input_validator import validate_input_file, validate_polygon_record

    is_valid, error_msg = validate_input_file(Path("does-not-exist.json"))
    assert not is_valid and error_msg == "File does not exist"
    is_valid, error_msg = validate_input_file(Path(__file__))
    assert not is_valid and "extension" in error_msg

    assert validate_polygon_record([{"kind": "line", "p1": 0, "p2": 1}] * 2) == (True, None)
    is_valid, _ = validate_polygon_record([{"kind": "spiral"}, {"kind": "line"}])
    assert not is_valid
    print("✓ Input validator working correctly")


def test_processors():
    """Test classification processors"""
    from src.config.settings import RunConfig
    from src.processors.classification_processor import ClassificationProcessor

    processor = ClassificationProcessor()
    subcommands = processor.get_supported_subcommands()
    assert 'algebraic' in subcommands
    assert 'polygon' in subcommands

    result = processor.process("algebraic", "y^2 - x", RunConfig())
    assert result["intermediates"]["group_order"] == 2
    assert all(v.status.value == "Representable" for v in result["verdicts"])
    print("✓ Classification processors working correctly")


def main():
    """Run all tests"""
    print("Testing TopoGalois components...")
    print("=" * 40)

    tests = [
        test_imports,
        test_settings,
        test_input_validator,
        test_processors
    ]

    passed = 0
    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            print(f"✗ {test.__name__} failed: {e}")
        print()

    print("=" * 40)
    print(f"Tests passed: {passed}/{len(tests)}")

    if passed == len(tests):
        print("✓ All tests passed! TopoGalois is ready to run.")
        print("\nTo classify an algebraic function, run:")
        print('  python main.py algebraic "y^5 + y - x"')
        print("  or")
        print('  ./run.sh algebraic "y^5 + y - x"')
    else:
        print("✗ Some tests failed. Please check the errors above.")
        return 1

    return 0


if __name__ == "__main__":
    sys.exit(main())
