import { FormController } from "./controller.js";

function boot(): void {
  const formEl = document.getElementById("dps-form");
  const resultEl = document.getElementById("dps-result");
  if (!formEl || !resultEl) {
    throw new Error("expected #dps-form and #dps-result containers");
  }

  const controller = new FormController(formEl, resultEl);

  formEl.addEventListener("change", (event) => {
    const target = event.target as HTMLInputElement;
    if (target?.type !== "radio" || !target.name.startsWith("attr-")) return;
    controller.answerChanged(Number(target.name.slice(5)), Number(target.value));
  });

  formEl.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target?.id === "dps-submit") {
      event.preventDefault();
      void controller.submit();
    }
    if (target?.id === "dps-retry") {
      void controller.load();
    }
  });

  void controller.load();
}

boot();
