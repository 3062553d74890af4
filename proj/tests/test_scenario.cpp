int fic_placeholder_scenario;
