from aztecdet.cli import main

raise SystemExit(main())
