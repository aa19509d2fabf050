// Build-time configuration. Deployments edit apiBase (or set
// window.LADINOMT_API_BASE before the bundle loads); tests point it at a
// throwaway server.

let apiBase = "http://127.0.0.1:8000";

declare global {
  interface Window {
    LADINOMT_API_BASE?: string;
  }
}

if (typeof window !== "undefined" && window.LADINOMT_API_BASE) {
  apiBase = window.LADINOMT_API_BASE;
}

export function getApiBase(): string {
  return apiBase;
}

export function setApiBase(base: string): void {
  apiBase = base.replace(/\/+$/, "");
}
