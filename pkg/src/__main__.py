from src.handlers.cli import main

raise SystemExit(main())
